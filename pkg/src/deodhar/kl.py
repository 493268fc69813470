"""
Kazhdan-Lusztig polynomials by the classical recursion and by Deodhar's masks.

The recursion works a whole row ``x -> P_{x,w}`` at a time over a group
table, with rows stored sparsely and built on demand.  The right-handed form
is used: for ``s`` the smallest right descent of ``w`` and ``v = ws``,

    P_{x,w} = q^{1-c} P_{xs,v} + q^c P_{x,v}
              - sum_{z < v, zs < z} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z},

with ``c = 1`` when ``xs < x`` and ``c = 0`` otherwise.

>>> from deodhar.coxeter import build_system
>>> A3 = build_system("A", 3)
>>> w, e = A3.element([3, 4, 1, 2]), A3.identity()
>>> str(kl_recursive(e, w)), str(kl_deodhar(e, w)), mu(A3.gen(2), w)
('1 + q', '1 + q', 1)
"""

from __future__ import annotations

import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import numpy as np

from .coxeter import (
    CoxeterSystem, Element, GroupTable, bruhat_leq, build_system, group_table, reduced_word,
)
from .errors import ConfigurationError, UnsupportedError
from .masks import defect_polynomials, defect_profile, is_bounded, is_deodhar, min_proper_statistic
from .polynomial import QPolynomial, ZERO

__all__ = [
    "KLTable", "kl_table", "kl_recursive", "kl_recursive_pairs", "kl_deodhar",
    "kl_deodhar_bruteforce", "mu", "MuReport", "verify_zero_one", "describe",
]

_LIMIT = 1 << 60  # coefficient guard for the int64 rows


class KLTable:
    """Memoized rows ``P_{., w}`` for every ``w`` of a finite Weyl group."""

    def __init__(self, system: CoxeterSystem):
        self.system = system
        self.table: GroupTable = group_table(system)
        T = self.table
        self.n = len(T)
        self.rmul = {s: np.asarray(T.rmul[s], dtype=np.int64) for s in T.gens}
        self.lengths = np.asarray(T.lengths, dtype=np.int64)
        self.width = int(self.lengths.max()) // 2 + 2
        self.arange = np.arange(self.n)
        self.rows: dict[int, tuple[np.ndarray, np.ndarray]] = {}
        one = np.zeros((1, self.width), dtype=np.int64)
        one[0, 0] = 1
        self.rows[0] = (np.zeros(1, dtype=np.int64), one)

    def _dense(self, w: int) -> np.ndarray:
        idx, coefs = self.row(w)
        out = np.zeros((self.n, self.width), dtype=np.int64)
        out[idx] = coefs
        return out

    def _shift(self, P: np.ndarray, k: int) -> np.ndarray:
        if k == 0:
            return P
        if P[:, self.width - k:].any():
            raise OverflowError("KL polynomial degree exceeds the row width")
        out = np.zeros_like(P)
        out[:, k:] = P[:, :-k]
        return out

    def row(self, w: int) -> tuple[np.ndarray, np.ndarray]:
        """Indices ``x`` with ``P_{x,w} != 0`` and their coefficient rows."""
        got = self.rows.get(w)
        if got is not None:
            return got
        # build the chain w, ws, wss, ... iteratively to keep recursion shallow
        chain = []
        u = w
        while u not in self.rows:
            chain.append(u)
            s = self.table.rdesc[u][0]
            u = self.table.rmul[s][u]
        for u in reversed(chain):
            self._compute(u)
        return self.rows[w]

    def _compute(self, w: int) -> None:
        T = self.table
        s = T.rdesc[w][0]
        v = T.rmul[s][w]
        xs = self.rmul[s]
        Pv = self._dense(v)
        Pv_xs = Pv[xs]
        c = (xs < self.arange)[:, None]  # indices are sorted by length
        res = np.where(c, Pv_xs, self._shift(Pv_xs, 1)) + np.where(c, self._shift(Pv, 1), Pv)
        idx, coefs = self.rows[v]
        lv = int(self.lengths[v])
        gap = lv - self.lengths[idx]
        odd = (gap % 2 == 1)
        cand = idx[odd]
        mus = coefs[odd, (gap[odd] - 1) // 2]
        keep = (mus != 0) & (xs[cand] < cand)
        lw = int(self.lengths[w])
        for z, m in zip(cand[keep].tolist(), mus[keep].tolist()):
            res -= m * self._shift(self._dense(z), (lw - int(self.lengths[z])) // 2)
        if np.abs(res).max() >= _LIMIT:
            raise OverflowError("KL coefficient outside the guarded range")
        nz = np.flatnonzero(res.any(axis=1))
        self.rows[w] = (nz, res[nz])

    def poly(self, x: int, w: int) -> QPolynomial:
        idx, coefs = self.row(w)
        k = np.searchsorted(idx, x)
        if k < len(idx) and idx[k] == x:
            return QPolynomial(tuple(int(a) for a in coefs[k]))
        return ZERO

    def row_dict(self, w: int) -> dict[int, tuple[int, ...]]:
        idx, coefs = self.row(w)
        return {int(i): tuple(int(a) for a in c) for i, c in zip(idx, coefs)}


@lru_cache(maxsize=None)
def kl_table(system: CoxeterSystem) -> KLTable:
    return KLTable(system)


def _same_system(x: Element, w: Element) -> CoxeterSystem:
    if x.system != w.system:
        raise ConfigurationError("elements from different systems")
    return w.system


def kl_recursive(x: Element, w: Element) -> QPolynomial:
    system = _same_system(x, w)
    K = kl_table(system)
    index = K.table.index
    return K.poly(index[x.key], index[w.key])


@lru_cache(maxsize=None)
def _pair(system: CoxeterSystem, x, w) -> QPolynomial:
    X, W = Element(system, x), Element(system, w)
    if x == w:
        return QPolynomial((1,))
    if not bruhat_leq(X, W):
        return ZERO
    if W.length() - X.length() <= 2:
        return QPolynomial((1,))
    s = min(W.right_descents())
    v = system._rmul(w, s)
    xs = system._rmul(x, s)
    c = 1 if system._is_descent(x, s) else 0
    q = QPolynomial.monomial
    total = q(1 - c) * _pair(system, xs, v) + q(c) * _pair(system, x, v)
    lv = Element(system, v).length()
    lw = W.length()
    for z in _interval_keys(system, v):
        if z == v or not system._is_descent(z, s):
            continue
        lz = Element(system, z).length()
        if (lv - lz) % 2 == 0:
            continue
        m = _pair(system, z, v)[(lv - lz - 1) // 2]
        if m:
            total = total - QPolynomial.monomial((lw - lz) // 2, m) * _pair(system, x, z)
    return total


@lru_cache(maxsize=None)
def _interval_keys(system: CoxeterSystem, w) -> tuple:
    from .coxeter import bruhat_interval
    return tuple(sorted(bruhat_interval(Element(system, w))))


def kl_recursive_pairs(x: Element, w: Element) -> QPolynomial:
    """Reference recursion memoized on ``(x, w)`` pairs, in plain Python integers."""
    system = _same_system(x, w)
    return _pair(system, x.key, w.key)


def kl_deodhar(x: Element, w: Element) -> QPolynomial:
    """``sum q^d(sigma)`` over the masks on a reduced word of ``w`` that evaluate to ``x``."""
    system = _same_system(x, w)
    word = reduced_word(w)
    if not is_bounded(system, word):
        raise UnsupportedError(f"{w!r} is not a Deodhar element")
    table = defect_polynomials(system.identity_key, word, system._rmul, system._is_descent)
    return QPolynomial.from_counts(table.get(x.key, {}))


def kl_deodhar_bruteforce(x: Element, w: Element, word=None) -> QPolynomial:
    """Same sum as :func:`kl_deodhar` over all ``2^l`` masks."""
    system = _same_system(x, w)
    word = reduced_word(w) if word is None else tuple(word)
    counts: Counter = Counter()
    for mask in product((0, 1), repeat=len(word)):
        prof = defect_profile(system, word, mask)
        if prof.subexpression == x:
            counts[prof.defects] += 1
    return QPolynomial.from_counts(counts)


def _mu_from(poly: QPolynomial, gap: int) -> int:
    if gap <= 0 or gap % 2 == 0:
        return 0
    return poly[(gap - 1) // 2]


def mu(x: Element, w: Element, *, route: bool = False):
    """
    Coefficient of ``q^{(l(w)-l(x)-1)/2}`` in ``P_{x,w}``.

    Deodhar elements go through masks, the rest through the recursion.  With
    ``route=True`` the pair ``(value, "masks" | "recursion")`` is returned.
    """
    _same_system(x, w)
    gap = w.length() - x.length()
    if is_deodhar(w):
        value, how = _mu_from(kl_deodhar(x, w), gap), "masks"
    else:
        value, how = _mu_from(kl_recursive(x, w), gap), "recursion"
    return (value, how) if route else value


# ----------------------------------------------------------------------
# whole-group sweep


@dataclass
class MuReport:
    system: str
    deodhar_only: bool
    deodhar_count: int = 0
    elements_checked: int = 0
    pairs_checked: int = 0
    mu_histogram: dict[int, int] = field(default_factory=dict)
    violations: list[tuple[str, str, int, int]] = field(default_factory=list)  # x, w, masks, recursion
    routes: dict[str, int] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "system": self.system,
            "deodhar_only": self.deodhar_only,
            "deodhar_count": self.deodhar_count,
            "elements_checked": self.elements_checked,
            "pairs_checked": self.pairs_checked,
            "mu_histogram": {str(k): v for k, v in sorted(self.mu_histogram.items())},
            "routes": dict(sorted(self.routes.items())),
            "violations": [list(v) for v in self.violations],
            "result": "PASS" if self.passed else "FAIL",
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    def to_text(self) -> str:
        d = self.to_dict()
        lines = [f"system={d['system']}", f"deodhar_only={str(self.deodhar_only).lower()}",
                 f"elements={d['elements_checked']}", f"pairs={d['pairs_checked']}",
                 "mu_histogram=" + " ".join(f"{k}:{v}" for k, v in d["mu_histogram"].items()),
                 "routes=" + " ".join(f"{k}:{v}" for k, v in d["routes"].items())]
        for x, w, a, b in self.violations:
            lines.append(f"violation x={x} w={w} masks={a} recursion={b}")
        lines.append(f"deodhar={self.deodhar_count} violations={len(self.violations)} "
                     f"{'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def describe(x: Element) -> str:
    """1-line notation for classical types, a reduced word otherwise."""
    if x.system.classical:
        return repr(x)
    return f"{x.system.name}({x.system.format_word(reduced_word(x))})"


def _check_element(K: KLTable, w: int, deodhar: bool) -> tuple[int, Counter, list, str]:
    T = K.table
    system = K.system
    lw = T.lengths[w]
    rec = K.row_dict(w)
    hist: Counter = Counter()
    bad = []
    if deodhar:
        word = reduced_word(T.element(w))
        rm = T.rmul
        polys = defect_polynomials(0, word, lambda i, s: rm[s][i], lambda i, s: rm[s][i] < i)
        if set(polys) != set(rec):
            missing = set(polys) ^ set(rec)
            for x in sorted(missing):
                bad.append((x, w, -1, -1))
        for x, counts in polys.items():
            gap = lw - T.lengths[x]
            m_mask = counts.get((gap - 1) // 2, 0) if gap % 2 == 1 else 0
            r = rec.get(x, ())
            m_rec = r[(gap - 1) // 2] if gap % 2 == 1 and (gap - 1) // 2 < len(r) else 0
            hist[m_mask] += 1
            if m_mask != m_rec or m_mask > 1:
                bad.append((x, w, m_mask, m_rec))
        return len(polys), hist, bad, "masks"
    for x, coefs in rec.items():
        gap = lw - T.lengths[x]
        m = coefs[(gap - 1) // 2] if gap % 2 == 1 else 0
        hist[m] += 1
        if m > 1:
            bad.append((x, w, m, m))
    return len(rec), hist, bad, "recursion"


def _is_deodhar_index(T: GroupTable, w: int) -> bool:
    word = reduced_word(T.element(w))
    rm = T.rmul
    m = min_proper_statistic(0, word, lambda i, s: rm[s][i], lambda i, s: rm[s][i] < i)
    return m is None or m > 0


def _sweep(args) -> tuple:
    family, rank, chunk, deodhar_only = args
    K = kl_table(build_system(family, rank))
    out = []
    for w in chunk:
        dd = _is_deodhar_index(K.table, w)
        if deodhar_only and not dd:
            out.append((w, dd, 0, Counter(), [], None))
            continue
        n, hist, bad, how = _check_element(K, w, dd)
        out.append((w, dd, n, hist, bad, how))
    return out


def verify_zero_one(system: CoxeterSystem, deodhar_only: bool = True,
                    max_length: int | None = None, jobs: int = 1) -> MuReport:
    """
    For every ``w`` (Deodhar ones only by default), compare ``mu(x, w)`` from
    masks against the recursion for all ``x <= w`` and flag values above 1.
    """
    start = time.perf_counter()
    T = group_table(system)
    ws = [w for w in range(len(T)) if max_length is None or T.lengths[w] <= max_length]
    report = MuReport(system=system.name, deodhar_only=deodhar_only)
    if jobs > 1:
        # interleave so each worker sees a mix of short and long elements
        chunks = [ws[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_sweep, [(system.family, system.rank, c, deodhar_only) for c in chunks]))
        results = sorted((r for part in parts for r in part), key=lambda r: r[0])
    else:
        results = _sweep((system.family, system.rank, ws, deodhar_only))
    hist: Counter = Counter()
    routes: Counter = Counter()
    for w, dd, n, h, bad, how in results:
        report.deodhar_count += dd
        if how is None:
            continue
        report.elements_checked += 1
        report.pairs_checked += n
        hist.update(h)
        routes[how] += 1
        for x, ww, a, b in bad:
            report.violations.append((describe(T.element(x)), describe(T.element(ww)), a, b))
    report.mu_histogram = dict(sorted(hist.items()))
    report.routes = dict(routes)
    report.elapsed = time.perf_counter() - start
    return report
