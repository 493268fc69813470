"""
Finite Weyl groups of types A, B, D, E, F and G.

Generators are identified by the integer subscripts of their Coxeter graph:

* ``A_n``: ``1..n``; ``s_i`` interchanges positions ``i`` and ``i+1`` of the
  1-line notation of a permutation of ``1..n+1``.
* ``B_n``: ``0..n-1``; ``s_0`` changes the sign of the first entry.
* ``D_n``: ``0..n-1`` where ``0`` is the fork generator, displayed ``1~``; it
  interchanges the first two entries and bars both of them.
* ``E_6``, ``E_7``, ``E_8``, ``F_4``, ``G_2``: ``1..n`` in Bourbaki numbering.

Generators act on the right of the 1-line notation.  Elements of the
classical types are stored as signed permutations; elements of the exceptional
types as the integer matrix whose row ``i`` is the image of the ``i``-th simple
root, written in simple-root coordinates.

>>> A3 = build_system("A", 3)
>>> w, reduced = element_from_word(A3, (1, 2, 1))
>>> w.one_line, reduced, length(w)
((3, 2, 1, 4), True, 3)
>>> [word for word in reduced_words(w)]
[(1, 2, 1), (2, 1, 2)]
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import islice

from .errors import ConfigurationError, PreconditionError

__all__ = [
    "CoxeterSystem", "Element", "GroupTable", "Word",
    "build_system", "apply_generator", "length", "is_right_descent",
    "element_from_word", "reduced_word", "reduced_words", "inverse",
    "bruhat_leq", "bruhat_interval", "enumerate_elements", "group_table",
    "is_short_braid_avoiding",
]

Word = tuple[int, ...]
Key = tuple  # signed permutation, or tuple of matrix rows

CLASSICAL = frozenset("ABD")
SUPPORTED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}

# Coxeter order from the product of the two off-diagonal Cartan entries.
_ORDER_FROM_PRODUCT = {0: 2, 1: 3, 2: 4, 3: 6}


def _cartan(family: str, rank: int) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Return ``(generators, C)`` with ``C[i][j] = <alpha_i, alpha_j^vee>``."""
    if family == "A":
        gens = tuple(range(1, rank + 1))
        edges = [(i, i + 1, -1, -1) for i in range(rank - 1)]
    elif family == "B":
        gens = tuple(range(rank))
        # alpha_0 short, the rest long
        edges = [(0, 1, -1, -2)] if rank > 1 else []
        edges += [(i, i + 1, -1, -1) for i in range(1, rank - 1)]
    elif family == "D":
        gens = tuple(range(rank))
        edges = [(0, 2, -1, -1)] if rank > 2 else []
        edges += [(i, i + 1, -1, -1) for i in range(1, rank - 1)]
    elif family == "E":
        gens = tuple(range(1, rank + 1))
        pairs = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]
        edges = [(a - 1, b - 1, -1, -1) for a, b in pairs if b <= rank]
    elif family == "F":
        gens = (1, 2, 3, 4)
        # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        edges = [(0, 1, -1, -1), (1, 2, -2, -1), (2, 3, -1, -1)]
    else:  # G
        gens = (1, 2)
        # alpha_1 short, alpha_2 long
        edges = [(0, 1, -1, -3)]
    C = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j, cij, cji in edges:
        C[i][j], C[j][i] = cij, cji
    return gens, tuple(tuple(row) for row in C)


def _reflect(beta: Sequence[int], j: int, C) -> tuple[int, ...]:
    """Apply the simple reflection ``s_j`` (by position) to a root vector."""
    c = sum(b * C[i][j] for i, b in enumerate(beta))
    if not c:
        return tuple(beta)
    out = list(beta)
    out[j] -= c
    return tuple(out)


def _positive_roots(C) -> tuple[tuple[int, ...], ...]:
    rank = len(C)
    simple = [tuple(int(i == k) for i in range(rank)) for k in range(rank)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for j in range(rank):
                gamma = _reflect(beta, j, C)
                if gamma not in seen and all(g >= 0 for g in gamma):
                    seen.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    return tuple(sorted(seen, key=lambda r: (sum(r), r)))


@dataclass(frozen=True, eq=False)
class CoxeterSystem:
    """A finite Weyl group together with its Coxeter and root data."""
    family: str
    rank: int
    generators: tuple[int, ...]
    generator_labels: tuple[str, ...]
    coxeter_matrix: tuple[tuple[int, ...], ...]  # by generator position
    cartan: tuple[tuple[int, ...], ...]  # by generator position
    positive_roots: tuple[tuple[int, ...], ...]
    _pos: dict = field(repr=False, compare=False)

    def __eq__(self, other):
        return (isinstance(other, CoxeterSystem)
                and (self.family, self.rank) == (other.family, other.rank))

    def __hash__(self):
        return hash((self.family, self.rank))

    def __repr__(self):
        return f"{self.family}{self.rank}"

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def classical(self) -> bool:
        return self.family in CLASSICAL

    @property
    def degree(self) -> int:
        """Number of entries in the 1-line notation (classical types)."""
        return self.rank + 1 if self.family == "A" else self.rank

    def position(self, s: int) -> int:
        try:
            return self._pos[s]
        except KeyError:
            raise ConfigurationError(f"{s!r} is not a generator of {self.name}") from None

    def m(self, s: int, t: int) -> int:
        """Order of ``s t``."""
        return self.coxeter_matrix[self.position(s)][self.position(t)]

    def commutes(self, s: int, t: int) -> bool:
        return self.coxeter_matrix[self._pos[s]][self._pos[t]] == 2

    def label(self, s: int) -> str:
        return self.generator_labels[self.position(s)]

    def column(self, s: int) -> int:
        """Heap column of a generator; ``s_1`` and ``s_1~`` share column 1 in type D."""
        if self.family == "D" and s == 0:
            return 1
        return s

    def parse_generator(self, token: str | int) -> int:
        if isinstance(token, int):
            self.position(token)
            return token
        tok = token.strip()
        if tok in self.generator_labels:
            return self.generators[self.generator_labels.index(tok)]
        raise ConfigurationError(f"unknown generator {token!r} for {self.name}")

    def parse_word(self, text: str | Iterable) -> Word:
        tokens = text.replace(",", " ").split() if isinstance(text, str) else list(text)
        return tuple(self.parse_generator(t) for t in tokens)

    def format_word(self, word: Iterable[int]) -> str:
        return " ".join(self.label(s) for s in word)

    # ------------------------------------------------------------------
    # elements

    @cached_property
    def identity_key(self) -> Key:
        if self.classical:
            return tuple(range(1, self.degree + 1))
        return tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))

    def identity(self) -> Element:
        return Element(self, self.identity_key)

    def gen(self, s: int) -> Element:
        return Element(self, self._rmul(self.identity_key, s))

    def element(self, one_line: Iterable[int] | str) -> Element:
        """Build a classical element from its (signed) 1-line notation."""
        if not self.classical:
            raise ConfigurationError(f"{self.name} elements have no 1-line notation")
        if isinstance(one_line, str):
            if one_line.strip() in ("id", "e", ""):
                return self.identity()
            try:
                one_line = [int(t) for t in one_line.replace(",", " ").split()]
            except ValueError:
                raise ConfigurationError(f"malformed 1-line notation {one_line!r}") from None
        key = tuple(int(v) for v in one_line)
        n = self.degree
        if len(key) != n or sorted(abs(v) for v in key) != list(range(1, n + 1)):
            raise ConfigurationError(f"{list(key)} is not a signed permutation of 1..{n}")
        negatives = sum(v < 0 for v in key)
        if self.family == "A" and negatives:
            raise ConfigurationError("type A elements have no barred entries")
        if self.family == "D" and negatives % 2:
            raise ConfigurationError("type D elements have an even number of barred entries")
        return Element(self, key)

    def from_matrix(self, rows) -> Element:
        key = tuple(tuple(int(v) for v in row) for row in rows)
        return Element(self, key)

    # low-level key operations; ``s`` is a generator id

    def _rmul(self, key: Key, s: int) -> Key:
        f = self.family
        if f == "A":
            k = list(key)
            k[s - 1], k[s] = k[s], k[s - 1]
            return tuple(k)
        if f in "BD":
            k = list(key)
            if s == 0:
                if f == "B":
                    k[0] = -k[0]
                else:
                    k[0], k[1] = -k[1], -k[0]
            else:
                k[s - 1], k[s] = k[s], k[s - 1]
            return tuple(k)
        j = self._pos[s]
        C = self.cartan
        Mj = key[j]
        rows = []
        for i, row in enumerate(key):
            c = C[i][j]
            rows.append(row if not c else tuple(a - c * b for a, b in zip(row, Mj)))
        return tuple(rows)

    def _lmul(self, key: Key, s: int) -> Key:
        f = self.family
        if f == "A":
            return tuple(s + 1 if v == s else s if v == s + 1 else v for v in key)
        if f in "BD":
            if s == 0:
                if f == "B":
                    return tuple(-v if abs(v) == 1 else v for v in key)
                return tuple((-2 if v > 0 else 2) if abs(v) == 1 else
                             (-1 if v > 0 else 1) if abs(v) == 2 else v for v in key)

            def swap(v):
                a = abs(v)
                if a == s:
                    return v + (1 if v > 0 else -1)
                if a == s + 1:
                    return v - (1 if v > 0 else -1)
                return v
            return tuple(swap(v) for v in key)
        j = self._pos[s]
        return tuple(_reflect(row, j, self.cartan) for row in key)

    def _is_descent(self, key: Key, s: int) -> bool:
        f = self.family
        if f == "A":
            return key[s - 1] > key[s]
        if f in "BD":
            if s == 0:
                return key[0] < 0 if f == "B" else key[0] + key[1] < 0
            return key[s - 1] > key[s]
        return any(v < 0 for v in key[self._pos[s]])

    def _length(self, key: Key) -> int:
        f = self.family
        if f in CLASSICAL:
            n = len(key)
            inv = sum(1 for i in range(n) for j in range(i + 1, n) if key[i] > key[j])
            if f == "A":
                return inv
            if f == "B":
                return inv - sum(v for v in key if v < 0)
            return inv + sum(1 for i in range(n) for j in range(i + 1, n) if key[i] + key[j] < 0)
        return self._root_length(key)

    def _matrix_image(self, key: Key, beta: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(b * row[k] for b, row in zip(beta, key)) for k in range(self.rank))

    def _root_length(self, key: Key) -> int:
        count = 0
        for beta in self.positive_roots:
            if any(v < 0 for v in self._matrix_image(key, beta)):
                count += 1
        return count

    def root_matrix(self, x: Element) -> Key:
        """Simple-root image matrix of any element, computed from a reduced word."""
        if not self.classical:
            return x.key
        key = tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))
        for s in reduced_word(x):
            key = _matrix_rmul(key, self._pos[s], self.cartan)
        return key

    def root_length(self, x: Element) -> int:
        """Number of positive roots sent negative, from the root-matrix action."""
        return self._root_length(self.root_matrix(x))


def _matrix_rmul(key, j, C):
    Mj = key[j]
    return tuple(row if not C[i][j] else tuple(a - C[i][j] * b for a, b in zip(row, Mj))
                 for i, row in enumerate(key))


@lru_cache(maxsize=None)
def build_system(family: str, rank: int) -> CoxeterSystem:
    """
    Construct the Coxeter system of the given type.

    >>> B4 = build_system("B", 4)
    >>> B4.generator_labels, B4.m(0, 1)
    (('0', '1', '2', '3'), 4)
    """
    family = str(family).upper()
    try:
        rank = int(rank)
    except (TypeError, ValueError):
        raise ConfigurationError(f"bad rank {rank!r}") from None
    if family not in "ABDEFG" or len(family) != 1:
        raise ConfigurationError(f"unsupported family {family!r}")
    if family in SUPPORTED_RANKS and rank not in SUPPORTED_RANKS[family]:
        raise ConfigurationError(f"unsupported rank {rank} for type {family}")
    if family in CLASSICAL and rank < (2 if family == "D" else 1):
        raise ConfigurationError(f"unsupported rank {rank} for type {family}")
    gens, C = _cartan(family, rank)
    M = tuple(tuple(1 if i == j else _ORDER_FROM_PRODUCT[C[i][j] * C[j][i]]
                    for j in range(rank)) for i in range(rank))
    if family == "D":
        labels = tuple("1~" if s == 0 else str(s) for s in gens)
    else:
        labels = tuple(str(s) for s in gens)
    return CoxeterSystem(
        family=family, rank=rank, generators=gens, generator_labels=labels,
        coxeter_matrix=M, cartan=C, positive_roots=_positive_roots(C),
        _pos={s: i for i, s in enumerate(gens)},
    )


@dataclass(frozen=True, slots=True)
class Element:
    """An element of a finite Weyl group, stored in canonical form."""
    system: CoxeterSystem
    key: Key

    def __repr__(self):
        if self.system.classical:
            return f"{self.system.name}[{','.join(map(str, self.key))}]"
        return f"{self.system.name}<{self.key}>"

    @property
    def one_line(self) -> tuple[int, ...]:
        if not self.system.classical:
            raise ConfigurationError("exceptional elements have no 1-line notation")
        return self.key

    def __mul__(self, other: Element) -> Element:
        if other.system != self.system:
            raise ConfigurationError("elements from different systems")
        if self.system.classical:
            x = self.key
            key = tuple(x[v - 1] if v > 0 else -x[-v - 1] for v in other.key)
            return Element(self.system, key)
        key = self.key
        for s in reduced_word(other):
            key = self.system._rmul(key, s)
        return Element(self.system, key)

    def length(self) -> int:
        return self.system._length(self.key)

    def is_identity(self) -> bool:
        return self.key == self.system.identity_key

    def right_descents(self) -> tuple[int, ...]:
        return tuple(s for s in self.system.generators if self.system._is_descent(self.key, s))

    def left_descents(self) -> tuple[int, ...]:
        return inverse(self).right_descents()

    def inverse(self) -> Element:
        return inverse(self)


def apply_generator(x: Element, s: int, side: str = "right") -> Element:
    """
    Return ``x s`` (``side="right"``) or ``s x`` (``side="left"``).

    >>> B4 = build_system("B", 4)
    >>> apply_generator(B4.element([-4, 2, -3, 1]), 0).one_line
    (4, 2, -3, 1)
    """
    x.system.position(s)
    if side == "right":
        return Element(x.system, x.system._rmul(x.key, s))
    if side == "left":
        return Element(x.system, x.system._lmul(x.key, s))
    raise ConfigurationError(f"side must be 'left' or 'right', not {side!r}")


def length(x: Element) -> int:
    return x.length()


def is_right_descent(x: Element, s: int) -> bool:
    x.system.position(s)
    return x.system._is_descent(x.key, s)


def element_from_word(system: CoxeterSystem, word: Iterable[int]) -> tuple[Element, bool]:
    """Multiply out a word left to right; report whether it was reduced."""
    key = system.identity_key
    reduced = True
    for s in word:
        system.position(s)
        if reduced and system._is_descent(key, s):
            reduced = False
        key = system._rmul(key, s)
    return Element(system, key), reduced


def reduced_word(x: Element) -> Word:
    """The lexicographically smallest reduced word for ``x``."""
    system = x.system
    key = inverse(x).key  # left descents of x are right descents of x^-1
    word = []
    ident = system.identity_key
    while key != ident:
        s = next(t for t in system.generators if system._is_descent(key, t))
        word.append(s)
        key = system._rmul(key, s)
    return tuple(word)


def reduced_words(x: Element, limit: int | None = None) -> Iterator[Word]:
    """All reduced words of ``x`` in lexicographic order (at most ``limit``)."""
    system = x.system

    def rec(key, prefix):
        # key is the inverse of the part still to be written
        if key == system.identity_key:
            yield tuple(prefix)
            return
        for s in system.generators:
            if system._is_descent(key, s):
                prefix.append(s)
                yield from rec(system._rmul(key, s), prefix)
                prefix.pop()

    it = rec(inverse(x).key, [])
    return islice(it, limit) if limit is not None else it


def inverse(x: Element) -> Element:
    system = x.system
    if system.classical:
        inv = [0] * len(x.key)
        for j, v in enumerate(x.key, start=1):
            inv[abs(v) - 1] = j if v > 0 else -j
        return Element(system, tuple(inv))
    key = system.identity_key
    word = []
    k = x.key
    while k != key:
        s = next(t for t in system.generators if system._is_descent(k, t))
        word.append(s)
        k = system._rmul(k, s)
    # x = word reversed, so x^-1 = word
    for s in word:
        key = system._rmul(key, s)
    return Element(system, key)


def bruhat_interval(w: Element) -> set[Key]:
    """Keys of all ``x <= w``, by the subword property on one reduced word."""
    system = w.system
    reach = {system.identity_key}
    for s in reduced_word(w):
        reach |= {system._rmul(k, s) for k in reach}
    return reach


def bruhat_leq(x: Element, w: Element) -> bool:
    if x.system != w.system:
        raise ConfigurationError("elements from different systems")
    if x.length() > w.length():
        return False
    return x.key in bruhat_interval(w)


def enumerate_elements(system: CoxeterSystem, max_length: int | None = None) -> Iterator[Element]:
    """Every element once, in order of nondecreasing length (ties by key)."""
    level = [system.identity_key]
    seen = {system.identity_key}
    ell = 0
    while level and (max_length is None or ell <= max_length):
        for key in level:
            yield Element(system, key)
        nxt = set()
        for key in level:
            for s in system.generators:
                if not system._is_descent(key, s):
                    k2 = system._rmul(key, s)
                    if k2 not in seen:
                        nxt.add(k2)
        seen |= nxt
        level = sorted(nxt)
        ell += 1


class GroupTable:
    """Index-based multiplication tables for a whole finite group."""

    def __init__(self, system: CoxeterSystem):
        self.system = system
        self.keys: list[Key] = [x.key for x in enumerate_elements(system)]
        self.index: dict[Key, int] = {k: i for i, k in enumerate(self.keys)}
        self.gens = system.generators
        idx = self.index
        self.rmul = {s: [idx[system._rmul(k, s)] for k in self.keys] for s in self.gens}
        self.lmul = {s: [idx[system._lmul(k, s)] for k in self.keys] for s in self.gens}
        self.lengths: list[int] = [0] * len(self.keys)
        for i in range(1, len(self.keys)):
            # first generator that decreases length
            for s in self.gens:
                j = self.rmul[s][i]
                if j < i:
                    self.lengths[i] = self.lengths[j] + 1
                    break
        self.rdesc = [tuple(s for s in self.gens if self.rmul[s][i] < i) for i in range(len(self.keys))]
        self.ldesc = [tuple(s for s in self.gens if self.lmul[s][i] < i) for i in range(len(self.keys))]
        self.inverse = [0] * len(self.keys)
        for i in range(1, len(self.keys)):
            # peel right descents off i, multiply them back in peel order
            j, inv = i, 0
            while j:
                s = self.rdesc[j][0]
                j = self.rmul[s][j]
                inv = self.rmul[s][inv]
            self.inverse[i] = inv

    def __len__(self):
        return len(self.keys)

    def element(self, i: int) -> Element:
        return Element(self.system, self.keys[i])


@lru_cache(maxsize=None)
def group_table(system: CoxeterSystem) -> GroupTable:
    return GroupTable(system)


def is_short_braid_avoiding(x: Element) -> bool:
    """
    No reduced word of ``x`` has a factor ``s t s`` with ``s, t`` non-commuting.

    Checked on the heap of one reduced word: a convex chain ``s < t < s`` in
    the heap is exactly a factor that some linear extension makes consecutive,
    and if no class admits one, no braid move applies, so the commutation class
    of that word is the set of all reduced words.
    """
    system = x.system
    word = reduced_word(x)
    k = len(word)
    below = [0] * k  # bitmask of strictly smaller entries
    for j in range(k):
        for i in range(j):
            if not system.commutes(word[i], word[j]):
                below[j] |= below[i] | (1 << i)
    for a in range(k):
        for c in range(a + 1, k):
            if word[a] != word[c] or not (below[c] >> a) & 1:
                continue
            between = [b for b in range(a + 1, c) if (below[c] >> b) & 1 and (below[b] >> a) & 1]
            if len(between) == 1 and not system.commutes(word[a], word[between[0]]):
                return False
    return True


def check_word(system: CoxeterSystem, word: Iterable[int]) -> Word:
    word = tuple(word)
    for s in word:
        system.position(s)
    return word


def require_reduced(system: CoxeterSystem, word: Word) -> Element:
    x, reduced = element_from_word(system, word)
    if not reduced:
        raise PreconditionError(f"word ({system.format_word(word)}) is not reduced")
    return x
