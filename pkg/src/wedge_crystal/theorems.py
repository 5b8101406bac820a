"""Exhaustive verification suites over the full crystal ground sets.

Every suite enumerates the whole state space (4^n matrices or 2^n
vectors), checks one structural statement exactly, and reports pass/fail
plus a machine-readable discrepancy list.  Connectivity questions are
settled by union-find over all operator edges, independently of the BFS
component builder, so the two implementations cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import bicrystal, crystal
from .cartan import AffineType, DOUBLE, FORK, SINGLE, fundamental_weight_cl


class UnionFind:
    """Disjoint sets over 0..size-1 with path compression."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.count = size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while x != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra
            self.count -= 1

    def classes(self) -> dict:
        out = {}
        for x in range(len(self.parent)):
            out.setdefault(self.find(x), []).append(x)
        return out


@dataclass
class SuiteResult:
    name: str
    passed: bool
    discrepancies: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    def note(self, msg: str):
        self.discrepancies.append(msg)
        self.passed = False


def h_diamond(t: AffineType):
    """Index set of component representatives for the doubled types."""
    if not t.doubled:
        raise ValueError(f"{t} has a single-column crystal; no (k,l) index set")
    n = t.n
    d = t.diamond
    if d == (DOUBLE, DOUBLE):
        pairs = [(k, l) for k in range(n + 1) for l in range(n - k + 1)]
    elif d == (SINGLE, DOUBLE):
        pairs = [(k, n - k) for k in range(n + 1)]
    elif d == (DOUBLE, SINGLE):
        pairs = [(k, 0) for k in range(n + 1)]
    else:  # (FORK, DOUBLE)
        pairs = [(k, n - k) for k in range(n + 1)] + [(0, n - 1)]
    return sorted(pairs)


def partition_ids(t: AffineType):
    """Union-find closure of the full ground set under all operator edges."""
    elements = crystal.all_elements(t)
    uf = UnionFind(len(elements))
    for el in elements:
        for i in range(t.n + 1):
            y = crystal.f_tilde(t, i, el)
            if y is not None:
                uf.union(el.id, y.id)
    return uf, elements


def classify_weight(t: AffineType, w) -> int | None:
    """Match a weight vector against the classical fundamental weights."""
    for k in range(t.n + 1):
        if tuple(w) == fundamental_weight_cl(t, k):
            return k
    return None


def expected_branching(t: AffineType, k: int, l: int):
    """Multiset of classically-highest weight labels inside one component."""
    if k == 0:
        return [0]
    d = t.diamond
    if d in ((DOUBLE, DOUBLE), (DOUBLE, SINGLE)):
        return [k]
    if d == (SINGLE, DOUBLE):
        return list(range(k + 1))
    # fork-plus-double
    if k == t.n:
        return sorted(k - 2 * i for i in range(k // 2 + 1))
    out = []
    for i in range(k // 2 + 1):
        out.extend([k - 2 * i, k - 2 * i])
    return sorted(out)


def _is_classically_highest(t: AffineType, x) -> bool:
    return all(crystal.e_tilde(t, i, x) is None for i in range(1, t.n + 1))


@dataclass
class ComponentRow:
    key: tuple  # (k, l) for matrices, ("spin", k) for vectors
    rep_id: int
    rep_text: str
    size: int
    weight: tuple
    branching: list
    sigma: tuple | None = None
    split: tuple | None = None  # (|plus half|, |minus half|) where defined


@dataclass
class DecompositionReport:
    type: AffineType
    rows: list
    total: int


def decomposition_report(t: AffineType) -> DecompositionReport:
    uf, elements = partition_ids(t)
    by_id = {el.id: el for el in elements}
    classes = uf.classes()
    rows = []
    if t.doubled:
        keys = [(k, l) for (k, l) in h_diamond(t)]
        reps = {key: crystal.v_kl(t, *key) for key in keys}
    else:
        keys = [("spin", t.n), ("spin", t.n - 1)]
        reps = {key: crystal.v_spin(t, key[1]) for key in keys}
        if t.diamond != (FORK, FORK):
            keys = [("spin", t.n)]
    for key in keys:
        rep = reps[key]
        members = [by_id[i] for i in classes[uf.find(rep.id)]]
        highest = [x for x in members if _is_classically_highest(t, x)]
        labels = sorted(classify_weight(t, crystal.weight(t, x)) for x in highest)
        sig = bicrystal.sigma(rep) if t.doubled else None
        split = None
        if t.diamond == (FORK, DOUBLE) and isinstance(key[0], int) and 1 <= key[0] <= t.n - 1 and key[1] == t.n - key[0]:
            k = key[0]
            plus = sum(1 for x in members if bicrystal.sigma(x)[1] == t.n - k)
            split = (plus, len(members) - plus)
        rows.append(ComponentRow(
            key=key, rep_id=rep.id, rep_text=rep.text, size=len(members),
            weight=crystal.weight(t, rep), branching=labels, sigma=sig,
            split=split,
        ))
    total = sum(r.size for r in rows)
    return DecompositionReport(type=t, rows=rows, total=total)


def verify_component_partition(t: AffineType) -> SuiteResult:
    """The ground set splits into exactly the indexed components."""
    res = SuiteResult(name="prop41", passed=True)
    if not t.doubled:
        raise ValueError("component partition suite needs a matrix-crystal type")
    uf, _ = partition_ids(t)
    pairs = h_diamond(t)
    reps = {pair: crystal.v_kl(t, *pair) for pair in pairs}
    roots = {pair: uf.find(rep.id) for pair, rep in reps.items()}
    if len(set(roots.values())) != len(pairs):
        res.note("representatives are not in pairwise distinct components")
    if uf.count != len(pairs):
        res.note(f"{uf.count} components found, expected {len(pairs)}")
    sizes = {root: len(ids) for root, ids in uf.classes().items()}
    total = sum(sizes.values())
    if total != 4 ** t.n:
        res.note(f"component sizes sum to {total}, expected {4 ** t.n}")
    res.stats = {
        "components": uf.count,
        "expected": len(pairs),
        "sizes": {str(pair): sizes[roots[pair]] for pair in pairs},
    }
    return res


def verify_classical_branching(t: AffineType) -> SuiteResult:
    """Within each component, the classically-highest weights are as listed."""
    res = SuiteResult(name="thm42", passed=True)
    if not t.doubled:
        raise ValueError("branching suite needs a matrix-crystal type")
    uf, elements = partition_ids(t)
    by_id = {el.id: el for el in elements}
    classes = uf.classes()
    for (k, l) in h_diamond(t):
        rep = crystal.v_kl(t, k, l)
        members = [by_id[i] for i in classes[uf.find(rep.id)]]
        highest = [x for x in members if _is_classically_highest(t, x)]
        labels = []
        for x in highest:
            lab = classify_weight(t, crystal.weight(t, x))
            if lab is None:
                res.note(f"({k},{l}): highest element {x.text} has an unexpected weight")
            labels.append(lab)
        if sorted(labels, key=str) != expected_branching(t, k, l):
            res.note(f"({k},{l}): branching {sorted(labels, key=str)} != expected "
                     f"{expected_branching(t, k, l)}")
        sub = UnionFind(4 ** t.n)
        for x in members:
            for i in range(1, t.n + 1):
                y = crystal.f_tilde(t, i, x)
                if y is not None:
                    sub.union(x.id, y.id)
        comp_roots = {sub.find(x.id) for x in members}
        if len(comp_roots) != len(highest):
            res.note(f"({k},{l}): {len(comp_roots)} classical components for "
                     f"{len(highest)} highest elements")
        per = {}
        for x in highest:
            per[sub.find(x.id)] = per.get(sub.find(x.id), 0) + 1
        if any(c != 1 for c in per.values()) or len(per) != len(comp_roots):
            res.note(f"({k},{l}): classical components and highest elements do not biject")
    return res


def _middle_ks(t: AffineType, k: int | None):
    ks = range(1, t.n) if k is None else [k]
    for kk in ks:
        if not 1 <= kk <= t.n - 1:
            raise ValueError(f"k must lie in 1..{t.n - 1}, got {kk}")
    return list(ks)


def verify_sigma_range(t: AffineType, k: int | None = None) -> SuiteResult:
    """String positions across a shared component stay in the two allowed lanes."""
    res = SuiteResult(name="lem44", passed=True)
    if t.diamond != (FORK, DOUBLE):
        raise ValueError("sigma-range suite needs the fork-plus-double type")
    for kk in _middle_ks(t, k):
        g = crystal.component(t, crystal.v_kl(t, kk, t.n - kk))
        allowed = set()
        for i in range(kk // 2 + 1):
            allowed.add((2 * i, t.n - kk))
            allowed.add((2 * i + 1, t.n - kk - 1))
        for el in g.vertices:
            if bicrystal.sigma(el) not in allowed:
                res.note(f"k={kk}: sigma{bicrystal.sigma(el)} of {el.text} out of range")
        plus = [el for el in g.vertices if bicrystal.sigma(el)[1] == t.n - kk]
        if any(bicrystal.sigma(el)[0] % 2 for el in plus):
            res.note(f"k={kk}: odd raise-count in the long-phi half")
        if 2 * len(plus) != len(g.vertices):
            res.note(f"k={kk}: halves have sizes {len(plus)} and "
                     f"{len(g.vertices) - len(plus)}")
    return res


def verify_involution_commutes(t: AffineType, k: int | None = None) -> SuiteResult:
    """The order-two symmetry commutes with every operator on its domain."""
    res = SuiteResult(name="prop46", passed=True)
    if t.diamond != (FORK, DOUBLE):
        raise ValueError("involution suite needs the fork-plus-double type")
    for kk in _middle_ks(t, k):
        g = crystal.component(t, crystal.v_kl(t, kk, t.n - kk))
        members = {el.id for el in g.vertices}
        for el in g.vertices:
            mate = bicrystal.varsigma(t, kk, el)
            if mate.id not in members:
                res.note(f"k={kk}: involution leaves the component at {el.text}")
                continue
            if mate.id == el.id:
                res.note(f"k={kk}: fixed point at {el.text}")
            if bicrystal.varsigma(t, kk, mate).id != el.id:
                res.note(f"k={kk}: involution not of order two at {el.text}")
            for i in range(t.n + 1):
                for op in (crystal.e_tilde, crystal.f_tilde):
                    a = op(t, i, el)
                    lhs = None if a is None else bicrystal.varsigma(t, kk, a)
                    b = op(t, i, mate)
                    if (lhs is None) != (b is None):
                        res.note(f"k={kk}: commutation defined-ness fails at "
                                 f"{el.text}, i={i}")
                    elif lhs is not None and lhs.id != b.id:
                        res.note(f"k={kk}: commutation fails at {el.text}, i={i}")
    return res


def verify_sigma_characterization(t: AffineType, k: int | None = None) -> SuiteResult:
    """Components coincide with their string-position level sets."""
    res = SuiteResult(name="thm58", passed=True)
    if not t.doubled:
        raise ValueError("characterization suite needs a matrix-crystal type")
    n = t.n
    ks = range(1, n + 1) if k is None else [k]
    elements = crystal.all_elements(t)
    sig = {el.id: bicrystal.sigma(el) for el in elements}
    d = t.diamond
    for kk in ks:
        if not 1 <= kk <= n:
            raise ValueError(f"k must lie in 1..{n}, got {kk}")
        if d == (DOUBLE, DOUBLE):
            comp = {el.id for el in crystal.component(t, crystal.v_kl(t, kk, 0)).vertices}
            level = {i for i, s in sig.items() if s == (n - kk, 0)}
        elif d == (SINGLE, DOUBLE):
            comp = {el.id for el in crystal.component(t, crystal.v_kl(t, kk, n - kk)).vertices}
            level = {i for i, s in sig.items()
                     if s[1] == n - kk and 0 <= kk - s[0] <= kk}
        elif d == (DOUBLE, SINGLE):
            comp = {el.id for el in crystal.component(t, crystal.v_kl(t, kk, 0)).vertices}
            level = {i for i, s in sig.items() if s[0] == n - kk and s[1] <= kk}
        else:  # fork-plus-double
            if kk == n:
                comp = {el.id for el in crystal.component(t, crystal.v_kl(t, n, 0)).vertices}
                level = {i for i, s in sig.items() if s[1] == 0 and s[0] % 2 == 0}
            else:
                g = crystal.component(t, crystal.v_kl(t, kk, n - kk))
                q = bicrystal.quotient_graph(g, kk)
                comp_orbits = {frozenset((p.id, m.id)) for p, m in q.orbits}
                by_id = {el.id: el for el in elements}
                level_orbits = set()
                for i, s in sig.items():
                    if s[1] == n - kk and s[0] % 2 == 0:
                        mate = bicrystal.varsigma(t, kk, by_id[i])
                        level_orbits.add(frozenset((i, mate.id)))
                if comp_orbits != level_orbits:
                    res.note(f"k={kk}: orbit sets differ "
                             f"({len(comp_orbits)} vs {len(level_orbits)})")
                continue
        if comp != level:
            res.note(f"k={kk}: component has {len(comp)} elements, level set "
                     f"{len(level)}; difference {sorted(comp ^ level)[:4]}")
    return res


def _graph_root(g, target_weight):
    hits = [el for el in g.vertices if g.weights[el.id] == tuple(target_weight)]
    return hits


def isomorphic_components(g1, g2, root1: int, root2: int) -> bool:
    """Colored-digraph isomorphism by simultaneous BFS from fixed roots."""
    out1, in1 = g1.out_edges(), g1.in_edges()
    out2, in2 = g2.out_edges(), g2.in_edges()
    colors = range(g1.type.n + 1)
    match = {root1: root2}
    queue = [root1]
    while queue:
        a = queue.pop(0)
        b = match[a]
        for c in colors:
            for table1, table2 in ((out1, out2), (in1, in2)):
                x = table1.get((a, c))
                y = table2.get((b, c))
                if (x is None) != (y is None):
                    return False
                if x is None:
                    continue
                if x in match:
                    if match[x] != y:
                        return False
                else:
                    match[x] = y
                    queue.append(x)
    if len(match) != len(g1.vertices) or len(g1.vertices) != len(g2.vertices):
        return False
    return True


def verify_multiplicities(t: AffineType) -> SuiteResult:
    """Count how often each irreducible crystal shows up in the ground set."""
    res = SuiteResult(name="cor57", passed=True)
    if not t.doubled:
        raise ValueError("multiplicity suite needs a matrix-crystal type")
    n = t.n
    d = t.diamond
    pairs = h_diamond(t)
    if d == (DOUBLE, DOUBLE):
        for k in range(n + 1):
            ls = [l for (kk, l) in pairs if kk == k]
            if len(ls) != n - k + 1:
                res.note(f"k={k}: {len(ls)} components, expected {n - k + 1}")
            if k == 0:
                continue
            graphs = [crystal.component(t, crystal.v_kl(t, k, l)) for l in ls]
            target = fundamental_weight_cl(t, k)
            roots = []
            for g, l in zip(graphs, ls):
                hits = _graph_root(g, target)
                if len(hits) != 1:
                    res.note(f"(k,l)=({k},{l}): weight multiplicity "
                             f"{len(hits)} at the extremal weight")
                roots.append(hits[0].id if hits else None)
            base = graphs[0]
            for g, l, r in zip(graphs[1:], ls[1:], roots[1:]):
                if r is None or roots[0] is None:
                    continue
                if not isomorphic_components(base, g, roots[0], r):
                    res.note(f"k={k}: component at l={l} not isomorphic to l={ls[0]}")
        res.stats["multiplicities"] = {k: n - k + 1 for k in range(n + 1)}
    elif d in ((SINGLE, DOUBLE), (DOUBLE, SINGLE)):
        per_k = {}
        for (k, l) in pairs:
            per_k[k] = per_k.get(k, 0) + 1
        for k, cnt in per_k.items():
            if cnt != 1:
                res.note(f"k={k}: {cnt} components, expected 1")
        res.stats["multiplicities"] = per_k
    else:  # fork-plus-double
        singles = [pair for pair in pairs if pair[0] == 0]
        if sorted(singles) != [(0, n - 1), (0, n)]:
            res.note(f"trivial components are {singles}")
        for (k, l) in singles:
            g = crystal.component(t, crystal.v_kl(t, k, l))
            if len(g.vertices) != 1:
                res.note(f"component of (0,{l}) has size {len(g.vertices)}")
        mult = {0: 2, n: 1}
        for k in range(1, n):
            g = crystal.component(t, crystal.v_kl(t, k, n - k))
            q = bicrystal.quotient_graph(g, k)
            if 2 * len(q.orbits) != len(g.vertices):
                res.note(f"k={k}: quotient size {len(q.orbits)} does not halve "
                         f"{len(g.vertices)}")
            mult[k] = 2
        res.stats["multiplicities"] = mult
    return res


def verify_spin_decomposition(t: AffineType) -> SuiteResult:
    """Single-column ground set: component count and weight multiplicities."""
    res = SuiteResult(name="spin", passed=True)
    if t.doubled:
        raise ValueError("spin suite needs a single-column type")
    n = t.n
    uf, elements = partition_ids(t)
    expected = 2 if t.diamond == (FORK, FORK) else 1
    if uf.count != expected:
        res.note(f"{uf.count} components, expected {expected}")
    top = crystal.v_spin(t, n)
    second = crystal.v_spin(t, n - 1)
    if expected == 2 and uf.find(top.id) == uf.find(second.id):
        res.note("the two canonical representatives share a component")
    if expected == 1 and uf.find(top.id) != uf.find(second.id):
        res.note("expected a single component containing both representatives")
    classes = uf.classes()
    sizes = sorted(len(ids) for ids in classes.values())
    if sum(sizes) != 2 ** n:
        res.note(f"sizes {sizes} do not sum to {2 ** n}")
    by_id = {el.id: el for el in elements}
    for root, ids in classes.items():
        weights = [crystal.weight(t, by_id[i]) for i in ids]
        if len(set(weights)) != len(weights):
            res.note(f"repeated weight inside component of {by_id[root].text}")
    reps = [top] if expected == 1 else [top, second]
    for k, rep in zip((n, n - 1), reps):
        if crystal.weight(t, rep) != fundamental_weight_cl(t, k):
            res.note(f"weight of the k={k} representative is "
                     f"{crystal.weight(t, rep)}")
    res.stats = {"components": uf.count, "sizes": sizes}
    return res


def verify_delta_shift(t: AffineType, k: int | None = None) -> SuiteResult:
    """The explicit reflection word swaps the two shared representatives."""
    res = SuiteResult(name="deltaword", passed=True)
    if t.diamond != (FORK, DOUBLE):
        raise ValueError("delta-shift suite needs the fork-plus-double type")
    for kk in _middle_ks(t, k):
        word = crystal.delta_word(t, kk)
        va = crystal.v_kl(t, kk, t.n - kk)
        vb = crystal.v_kl(t, kk, t.n - kk - 1)
        try:
            fwd = crystal.weyl_action(t, word, va)
            back = crystal.weyl_action(t, word, vb)
        except RuntimeError as exc:
            res.note(f"k={kk}: {exc}")
            continue
        if fwd.id != vb.id:
            res.note(f"k={kk}: word sends {va.text} to {fwd.text}, wanted {vb.text}")
        if back.id != va.id:
            res.note(f"k={kk}: word sends {vb.text} to {back.text}, wanted {va.text}")
    return res
