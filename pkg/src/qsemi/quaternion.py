"""Regular permutation model of the generalized quaternion group of order 4k.

The group is generated by t (order 2k) and u, subject to

    t^(2k) = 1,   u^2 = t^k,   u^(-1) t u = t^(-1).

Writing every element as t^i or t^i u, the point i+1 stands for t^i and the
point 2k+i+1 stands for t^i u (0 <= i < 2k).  Each group element then acts on
the n = 4k points by left multiplication, which makes t a pair of 2k-cycles
and u a product of k disjoint 4-cycles.  Both generators are built from the
left-multiplication rule and u is cross-checked against its explicit cycle
form; any disagreement raises ConsistencyError.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ClosureError, ConsistencyError
from .perms import Perm, compose, cycle_string, from_cycles, identity, inverse

Label = tuple[int, int]  # (i, j) stands for t^i u^j with 0 <= i < 2k, j in {0, 1}


@dataclass(frozen=True)
class QuaternionConfig:
    """Size parameter; the group has order n = 4k and acts on n points."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError(f"k must be at least 2, got {self.k}")

    @property
    def n(self) -> int:
        return 4 * self.k


@dataclass(frozen=True, eq=False)
class GroupTable:
    """The group as an indexed list of image tuples.

    `elements[i]` is the image tuple of element number i, `labels` maps the
    normal form (i, j) of t^i u^j to that number, and `index` inverts
    `elements` for O(1) membership tests on candidate windows.
    """

    k: int
    n: int
    elements: tuple[Perm, ...]
    labels: dict[Label, int]
    index: dict[Perm, int]
    t: Perm
    u: Perm

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Perm) -> bool:
        return p in self.index

    @property
    def identity(self) -> Perm:
        return identity(self.n)

    def element(self, i: int, j: int) -> Perm:
        return self.elements[self.labels[(i % (2 * self.k), j % 2)]]

    def label_of(self, idx: int) -> Label:
        for lab, i in self.labels.items():
            if i == idx:
                return lab
        raise KeyError(idx)

    def label_name(self, idx: int) -> str:
        if not self.labels:
            return f"#{idx}"
        i, j = self.label_of(idx)
        return format_label((i, j))


def format_label(label: Label) -> str:
    i, j = label
    ti = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
    uj = "" if j == 0 else "u"
    if not ti and not uj:
        return "e"
    if ti and uj:
        return f"{ti} {uj}"
    return ti or uj


def build_t(cfg: QuaternionConfig) -> Perm:
    """The generator t: one 2k-cycle on each half of the points."""
    k = cfg.k
    first = tuple(range(1, 2 * k + 1))
    second = tuple(range(2 * k + 1, 4 * k + 1))
    return from_cycles(cfg.n, [first, second])


def _u_from_action(cfg: QuaternionConfig) -> Perm:
    # Left multiplication by u: u * t^e = t^(-e) u and u * t^e u = t^(k-e).
    k, n = cfg.k, cfg.n
    images = [0] * n
    for p in range(1, 2 * k + 1):
        e = p - 1
        images[p - 1] = 2 * k + 1 + ((-e) % (2 * k))
    for p in range(2 * k + 1, n + 1):
        e = p - 2 * k - 1
        images[p - 1] = 1 + ((k - e) % (2 * k))
    return tuple(images)


def _u_from_cycle_form(cfg: QuaternionConfig) -> Perm:
    # The k disjoint 4-cycles of u written out directly.  The second and
    # fourth entries live in the upper half, so they wrap modulo 2k there.
    k = cfg.k
    cycs = []
    for j in range(1, k + 1):
        second = 2 * k + 1 + ((2 * k + 1 - j) % (2 * k))
        fourth = 2 * k + 1 + ((k + 1 - j) % (2 * k))
        cycs.append((j, second, j + k, fourth))
    return from_cycles(cfg.n, cycs)


def build_u(cfg: QuaternionConfig) -> Perm:
    """The generator u, from the left-multiplication rule.

    The explicit cycle form is computed independently and must agree.
    """
    u_act = _u_from_action(cfg)
    u_cyc = _u_from_cycle_form(cfg)
    if u_act != u_cyc:
        raise ConsistencyError(
            f"u built from the group action disagrees with its cycle form at k={cfg.k}: "
            f"{u_act} vs {u_cyc}"
        )
    return u_act


def generate_group(cfg: QuaternionConfig) -> GroupTable:
    """Close {t, u} under composition and label every element t^i u^j."""
    k, n = cfg.k, cfg.n
    t = build_t(cfg)
    u = build_u(cfg)

    elements: list[Perm] = []
    labels: dict[Label, int] = {}
    ti = identity(n)
    for i in range(2 * k):
        for j, p in ((0, ti), (1, compose(ti, u))):
            labels[(i, j)] = len(elements)
            elements.append(p)
        ti = compose(t, ti)

    index = {p: i for i, p in enumerate(elements)}
    if len(index) != n:
        raise ClosureError(f"expected {n} distinct elements, got {len(index)}")

    # Independent closure of the generating set.
    closure = {t, u}
    frontier = [t, u]
    while frontier:
        nxt = []
        for a in frontier:
            for b in (t, u):
                c = compose(a, b)
                if c not in closure:
                    closure.add(c)
                    if len(closure) > n:
                        raise ClosureError(
                            f"closure of t, u exceeded {n} elements at k={k}"
                        )
                    nxt.append(c)
        frontier = nxt
    if closure != set(elements):
        raise ClosureError(f"closure of t, u is not the labelled set at k={k}")

    _validate(cfg, t, u, elements)
    return GroupTable(k=k, n=n, elements=tuple(elements), labels=labels,
                      index=index, t=t, u=u)


def _validate(cfg: QuaternionConfig, t: Perm, u: Perm, elements: list[Perm]) -> None:
    k, n = cfg.k, cfg.n
    e = identity(n)
    u2 = compose(u, u)
    checks = [
        (power_eq(t, 2 * k, e), "t^(2k) = 1"),
        (compose(u2, u2) == e, "u^4 = 1"),
        (u2 == _power(t, k), "u^2 = t^k"),
        (compose(compose(inverse(u), t), u) == inverse(t), "u^-1 t u = t^-1"),
    ]
    for ok, name in checks:
        if not ok:
            raise ConsistencyError(f"defining relation {name} fails at k={k}")
    for p in elements:
        if p != e and any(p[i] == i + 1 for i in range(n)):
            raise ConsistencyError(f"non-identity element with a fixed point at k={k}")


def _power(p: Perm, e: int) -> Perm:
    out = identity(len(p))
    for _ in range(e):
        out = compose(p, out)
    return out


def power_eq(p: Perm, e: int, target: Perm) -> bool:
    return _power(p, e) == target


def point_of_label(label: Label, k: int) -> int:
    """The point standing for the element t^i u^j."""
    i, j = label
    return i + 1 if j == 0 else 2 * k + i + 1


def label_of_point(p: int, k: int) -> Label:
    if 1 <= p <= 2 * k:
        return (p - 1, 0)
    if 2 * k < p <= 4 * k:
        return (p - 2 * k - 1, 1)
    raise ValueError(f"point {p} out of range 1..{4 * k}")


def label_mul(a: Label, b: Label, k: int) -> Label:
    """Product of two elements in (i, j) normal form."""
    i1, j1 = a
    i2, j2 = b
    i = i1 + (i2 if j1 == 0 else -i2)
    if j1 == 1 and j2 == 1:
        i += k
    return (i % (2 * k), (j1 + j2) % 2)


def check_other(g: GroupTable) -> bool:
    """u sends at least one point of the lower half into the upper half."""
    return any(g.u[p - 1] > 2 * g.k for p in range(1, 2 * g.k + 1))


def check_disjoi(g: GroupTable) -> bool:
    """Every element preserves the two halves setwise or swaps them."""
    lower = set(range(1, 2 * g.k + 1))
    upper = set(range(2 * g.k + 1, g.n + 1))
    for p in g.elements:
        img_lower = {p[x - 1] for x in lower}
        if not (img_lower == lower or img_lower == upper):
            return False
    return True


def check_stabilizer_free(g: GroupTable) -> bool:
    """No non-identity element fixes a point."""
    e = g.identity
    for p in g.elements:
        if p == e:
            continue
        if any(p[i] == i + 1 for i in range(g.n)):
            return False
    return True


def group_checks(g: GroupTable) -> dict[str, bool]:
    return {
        "other": check_other(g),
        "disjoint_halves": check_disjoi(g),
        "stabilizer_free": check_stabilizer_free(g),
    }


def describe_elements(g: GroupTable) -> list[dict]:
    """Rows for display: index, label, cycle form, images."""
    rows = []
    for idx, p in enumerate(g.elements):
        rows.append({
            "index": idx,
            "label": g.label_name(idx),
            "cycles": cycle_string(p),
            "images": list(p),
        })
    return rows
