"""Crystal combinatorics on binary vectors and two-column binary matrices.

The ground set is the set of length-n bit vectors (single-column types) or
n x 2 bit matrices (doubled types).  Positions are indexed by the barred
alphabet n-bar < ... < 1-bar; we store position j for j-bar, display rows
from n-bar (top) down to 1-bar (bottom), and encode elements as integer
bitmasks, column-major with row n-bar as the least significant bit.

Raising and lowering operators act per index i in 0..n:

* middle indices move a bit between adjacent rows of one column (the usual
  sl_n rule, combined across the two columns by the tensor product rule),
* a SINGLE end toggles the terminal bit of one column,
* a FORK end toggles the two terminal bits of one column together,
* a DOUBLE end toggles the full terminal row of the matrix in one step.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cartan import AffineType, DOUBLE, FORK, SINGLE


class BinaryVector:
    """Element of the single-column ground set; bits[j-1] is row j-bar."""

    __slots__ = ("bits",)

    def __init__(self, bits):
        self.bits = tuple(int(b) for b in bits)
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("bits must be 0 or 1")

    @property
    def n(self) -> int:
        return len(self.bits)

    def get(self, j: int) -> int:
        return self.bits[j - 1]

    def updated(self, changes: dict) -> "BinaryVector":
        bits = list(self.bits)
        for j, v in changes.items():
            bits[j - 1] = v
        return BinaryVector(bits)

    @property
    def id(self) -> int:
        n = len(self.bits)
        return sum(self.bits[j - 1] << (n - j) for j in range(1, n + 1))

    @classmethod
    def from_id(cls, n: int, v: int) -> "BinaryVector":
        return cls([(v >> (n - j)) & 1 for j in range(1, n + 1)])

    @property
    def text(self) -> str:
        return "/".join(str(self.bits[j - 1]) for j in range(len(self.bits), 0, -1))

    @classmethod
    def from_text(cls, text: str) -> "BinaryVector":
        rows = text.strip().split("/")
        bits = [int(r) for r in reversed(rows)]
        return cls(bits)

    def __eq__(self, other):
        return isinstance(other, BinaryVector) and self.bits == other.bits

    def __hash__(self):
        return hash(("v", self.bits))

    def __repr__(self):
        return f"BinaryVector({self.text})"


class BinaryMatrix:
    """Element of the two-column ground set: a pair of binary columns."""

    __slots__ = ("col1", "col2")

    def __init__(self, col1: BinaryVector, col2: BinaryVector):
        if col1.n != col2.n:
            raise ValueError("columns must have equal length")
        self.col1 = col1
        self.col2 = col2

    @property
    def n(self) -> int:
        return self.col1.n

    def row(self, j: int):
        return (self.col1.get(j), self.col2.get(j))

    @property
    def id(self) -> int:
        return self.col1.id | (self.col2.id << self.n)

    @classmethod
    def from_id(cls, n: int, v: int) -> "BinaryMatrix":
        mask = (1 << n) - 1
        return cls(BinaryVector.from_id(n, v & mask), BinaryVector.from_id(n, v >> n))

    @property
    def text(self) -> str:
        n = self.n
        return "/".join(
            f"{self.col1.get(j)}{self.col2.get(j)}" for j in range(n, 0, -1)
        )

    @classmethod
    def from_text(cls, text: str) -> "BinaryMatrix":
        rows = text.strip().split("/")
        n = len(rows)
        c1, c2 = [0] * n, [0] * n
        for offset, row in enumerate(rows):
            if len(row) != 2 or any(ch not in "01" for ch in row):
                raise ValueError(f"bad matrix row {row!r}")
            j = n - offset
            c1[j - 1] = int(row[0])
            c2[j - 1] = int(row[1])
        return cls(BinaryVector(c1), BinaryVector(c2))

    def with_row(self, j: int, pair) -> "BinaryMatrix":
        return BinaryMatrix(self.col1.updated({j: pair[0]}),
                            self.col2.updated({j: pair[1]}))

    def __eq__(self, other):
        return (isinstance(other, BinaryMatrix)
                and self.col1 == other.col1 and self.col2 == other.col2)

    def __hash__(self):
        return hash(("m", self.col1.bits, self.col2.bits))

    def __repr__(self):
        return f"BinaryMatrix({self.text})"


def _check_index(t: AffineType, i: int):
    if not 0 <= i <= t.n:
        raise ValueError(f"index {i} out of range for n={t.n}")


def _col_e(t: AffineType, i: int, v: BinaryVector):
    """Raising operator on one column (middle or non-doubled end index)."""
    n = t.n
    if 1 <= i <= n - 1:
        if v.get(i + 1) == 0 and v.get(i) == 1:
            return v.updated({i + 1: 1, i: 0})
        return None
    if i == 0:
        shape = t.end0
        if shape == SINGLE:
            return v.updated({1: 1}) if v.get(1) == 0 else None
        if shape == FORK:
            if v.get(1) == 0 and v.get(2) == 0:
                return v.updated({1: 1, 2: 1})
            return None
    else:
        shape = t.end_n
        if shape == SINGLE:
            return v.updated({n: 0}) if v.get(n) == 1 else None
        if shape == FORK:
            if v.get(n) == 1 and v.get(n - 1) == 1:
                return v.updated({n: 0, n - 1: 0})
            return None
    raise ValueError(f"index {i} has no single-column rule for {t}")


def _col_f(t: AffineType, i: int, v: BinaryVector):
    n = t.n
    if 1 <= i <= n - 1:
        if v.get(i + 1) == 1 and v.get(i) == 0:
            return v.updated({i + 1: 0, i: 1})
        return None
    if i == 0:
        shape = t.end0
        if shape == SINGLE:
            return v.updated({1: 0}) if v.get(1) == 1 else None
        if shape == FORK:
            if v.get(1) == 1 and v.get(2) == 1:
                return v.updated({1: 0, 2: 0})
            return None
    else:
        shape = t.end_n
        if shape == SINGLE:
            return v.updated({n: 1}) if v.get(n) == 0 else None
        if shape == FORK:
            if v.get(n) == 0 and v.get(n - 1) == 0:
                return v.updated({n: 1, n - 1: 1})
            return None
    raise ValueError(f"index {i} has no single-column rule for {t}")


def _double_end(t: AffineType, i: int) -> bool:
    return (i == 0 and t.end0 == DOUBLE) or (i == t.n and t.end_n == DOUBLE)


def e_tilde(t: AffineType, i: int, x):
    """Raising operator; returns the raised element or None."""
    _check_index(t, i)
    if isinstance(x, BinaryVector):
        if t.doubled:
            raise ValueError(f"{t} acts on matrices, not vectors")
        return _col_e(t, i, x)
    if not isinstance(x, BinaryMatrix):
        raise ValueError(f"not a crystal element: {x!r}")
    if not t.doubled:
        raise ValueError(f"{t} acts on vectors, not matrices")
    if _double_end(t, i):
        if i == 0:
            return x.with_row(1, (1, 1)) if x.row(1) == (0, 0) else None
        return x.with_row(t.n, (0, 0)) if x.row(t.n) == (1, 1) else None
    phi1 = _col_f(t, i, x.col1) is not None
    eps2 = _col_e(t, i, x.col2) is not None
    if phi1 >= eps2:
        c1 = _col_e(t, i, x.col1)
        return None if c1 is None else BinaryMatrix(c1, x.col2)
    c2 = _col_e(t, i, x.col2)
    return None if c2 is None else BinaryMatrix(x.col1, c2)


def f_tilde(t: AffineType, i: int, x):
    """Lowering operator, the inverse relation of :func:`e_tilde`."""
    _check_index(t, i)
    if isinstance(x, BinaryVector):
        if t.doubled:
            raise ValueError(f"{t} acts on matrices, not vectors")
        return _col_f(t, i, x)
    if not isinstance(x, BinaryMatrix):
        raise ValueError(f"not a crystal element: {x!r}")
    if not t.doubled:
        raise ValueError(f"{t} acts on vectors, not matrices")
    if _double_end(t, i):
        if i == 0:
            return x.with_row(1, (0, 0)) if x.row(1) == (1, 1) else None
        return x.with_row(t.n, (1, 1)) if x.row(t.n) == (0, 0) else None
    phi1 = _col_f(t, i, x.col1) is not None
    eps2 = _col_e(t, i, x.col2) is not None
    if phi1 > eps2:
        c1 = _col_f(t, i, x.col1)
        return None if c1 is None else BinaryMatrix(c1, x.col2)
    c2 = _col_f(t, i, x.col2)
    return None if c2 is None else BinaryMatrix(x.col1, c2)


def string_lengths(t: AffineType, i: int, x):
    """(epsilon_i, phi_i): how often the raising/lowering operator applies."""
    eps = 0
    y = e_tilde(t, i, x)
    while y is not None:
        eps += 1
        y = e_tilde(t, i, y)
    phi = 0
    y = f_tilde(t, i, x)
    while y is not None:
        phi += 1
        y = f_tilde(t, i, y)
    return eps, phi


def weight(t: AffineType, x):
    """Coroot pairings (phi_i - epsilon_i) over the full index set."""
    out = []
    for i in range(t.n + 1):
        eps, phi = string_lengths(t, i, x)
        out.append(phi - eps)
    return tuple(out)


def v_kl(t: AffineType, k: int, l: int) -> BinaryMatrix:
    """Canonical classically-highest matrix indexed by (k, l).

    Column 1 carries ones in its top l rows, column 2 in the next n-k-l.
    """
    n = t.n
    if not (0 <= k <= n and 0 <= l <= n - k):
        raise ValueError(f"(k,l)=({k},{l}) out of range for n={n}")
    c1 = [0] * n
    c2 = [0] * n
    for j in range(n - l + 1, n + 1):
        c1[j - 1] = 1
    for j in range(k + 1, n - l + 1):
        c2[j - 1] = 1
    return BinaryMatrix(BinaryVector(c1), BinaryVector(c2))


def v_spin(t: AffineType, k: int) -> BinaryVector:
    """Highest representative of the one or two single-column components."""
    n = t.n
    if k == n:
        return BinaryVector([0] * n)
    if k == n - 1:
        return BinaryVector([0] * (n - 1) + [1])  # row n-bar set
    raise ValueError(f"spin index must be n or n-1, got {k}")


def all_elements(t: AffineType):
    """The full ground set, in id order."""
    n = t.n
    if t.doubled:
        return [BinaryMatrix.from_id(n, v) for v in range(4 ** n)]
    return [BinaryVector.from_id(n, v) for v in range(2 ** n)]


@dataclass
class CrystalGraph:
    """A connected component with its colored edges and vertex annotations.

    Edges record the lowering direction: (src, dst, i) means index i lowers
    src to dst (equivalently raises dst to src).  Vertices are sorted by id.
    """

    type: AffineType
    vertices: tuple
    edges: tuple  # (src_id, dst_id, color)
    weights: dict = field(repr=False)
    sigma: dict = field(repr=False, default=None)

    @property
    def by_id(self):
        return {x.id: x for x in self.vertices}

    def out_edges(self):
        out = {}
        for s, d, c in self.edges:
            out[(s, c)] = d
        return out

    def in_edges(self):
        inc = {}
        for s, d, c in self.edges:
            inc[(d, c)] = s
        return inc


def component(t: AffineType, x) -> CrystalGraph:
    """Closure of x under all raising and lowering operators (BFS)."""
    from . import bicrystal  # local import; sigma annotations on matrices

    seen = {x.id: x}
    frontier = [x]
    while frontier:
        frontier.sort(key=lambda e: e.id)
        new = []
        for el in frontier:
            for i in range(t.n + 1):
                for op in (f_tilde, e_tilde):
                    y = op(t, i, el)
                    if y is not None and y.id not in seen:
                        seen[y.id] = y
                        new.append(y)
        frontier = new
    vertices = tuple(sorted(seen.values(), key=lambda e: e.id))
    edges = []
    for el in vertices:
        for i in range(t.n + 1):
            y = f_tilde(t, i, el)
            if y is not None:
                edges.append((el.id, y.id, i))
    edges.sort()
    weights = {el.id: weight(t, el) for el in vertices}
    sigma = None
    if t.doubled:
        sigma = {el.id: bicrystal.sigma(el) for el in vertices}
    return CrystalGraph(type=t, vertices=vertices, edges=tuple(edges),
                        weights=weights, sigma=sigma)


def weyl_reflection(t: AffineType, i: int, x):
    """Simple-reflection action on a regular crystal element."""
    eps, phi = string_lengths(t, i, x)
    m = phi - eps
    y = x
    if m >= 0:
        for _ in range(m):
            y = f_tilde(t, i, y)
            if y is None:
                raise RuntimeError(f"lowering string ended early at index {i}")
    else:
        for _ in range(-m):
            y = e_tilde(t, i, y)
            if y is None:
                raise RuntimeError(f"raising string ended early at index {i}")
    return y


def weyl_action(t: AffineType, word, x):
    """Apply the reflection word left to right."""
    y = x
    for i in word:
        y = weyl_reflection(t, i, y)
    return y


def delta_word(t: AffineType, k: int):
    """Reflection word shifting the k-th fundamental weight by the null root.

    Only defined for the fork-plus-double labeling, 1 <= k <= n-1; applying
    it via :func:`weyl_action` swaps the two canonical representatives of
    the shared component.
    """
    if t.diamond != (FORK, DOUBLE):
        raise ValueError(f"delta word is only defined for {FORK},{DOUBLE} types")
    n = t.n
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must lie in 1..{n - 1}, got {k}")

    def block(i):
        return list(range(i, n - k + i))

    word = []
    for i in range(k, 0, -1):
        word.extend(block(i))
    word.extend(range(n, 1, -1))
    word.append(0)
    tail = []
    for i in range(k, 1, -1):
        tail.extend(block(i))
    word.extend(reversed(tail))
    return tuple(word)
