"""Conway algebras: the axioms, builtin instances, and a small magma laboratory.

A Conway algebra is a set with constants a_1, a_2, ... and two binary
operations | and * satisfying

  C1: a_n | a_{n+1} = a_n            C2: a_n * a_{n+1} = a_n
  C3: (a|b)|(c|d) = (a|c)|(b|d)      C4: (a|b)*(c|d) = (a*c)|(b*d)
  C5: (a*b)*(c*d) = (a*c)*(b*d)      C6: (a|b)*b = a
  C7: (a*b)|b = a

In the skein recursion, pipe(u, v) is the value at the positive crossing
given the values u at the switched and v at the smoothed diagram, and
star(u, v) plays the same role at a negative crossing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from skeinlab.laurent import LaurentPoly


class AlgebraError(ValueError):
    pass


# ---------------------------------------------------------------------------
# algebra classes


@dataclass(frozen=True)
class FiniteConwayAlgebra:
    """Tables over a finite universe; constants are eventually periodic."""

    name: str
    elements: tuple
    pipe_table: tuple  # pipe_table[i][j] = index of elements[i] | elements[j]
    star_table: tuple
    preperiod: tuple  # element indices for a_1, a_2, ...
    period: tuple

    def __post_init__(self):
        n = len(self.elements)
        for tbl, nm in ((self.pipe_table, "pipe"), (self.star_table, "star")):
            if len(tbl) != n or any(len(row) != n for row in tbl):
                raise AlgebraError(f"{nm} table is not {n}x{n}")
            if any(v not in range(n) for row in tbl for v in row):
                raise AlgebraError(f"{nm} table has entries outside the universe")
        if not self.period:
            raise AlgebraError("constants need a nonempty period")

    @property
    def size(self) -> int:
        return len(self.elements)

    def index(self, x) -> int:
        return self.elements.index(x)

    def constant(self, n: int):
        if n < 1:
            raise AlgebraError(f"constants are indexed from 1, got {n}")
        if n <= len(self.preperiod):
            return self.elements[self.preperiod[n - 1]]
        k = (n - len(self.preperiod) - 1) % len(self.period)
        return self.elements[self.period[k]]

    def pipe(self, u, v):
        return self.elements[self.pipe_table[self.index(u)][self.index(v)]]

    def star(self, u, v):
        return self.elements[self.star_table[self.index(u)][self.index(v)]]


@dataclass(frozen=True)
class FunctionalConwayAlgebra:
    """Operations given by callables; universe may be infinite."""

    name: str
    constant_fn: Callable[[int], object]
    pipe_fn: Callable[[object, object], object]
    star_fn: Callable[[object, object], object]
    sample: tuple = ()  # finite window used by the axiom checker

    def constant(self, n: int):
        if n < 1:
            raise AlgebraError(f"constants are indexed from 1, got {n}")
        return self.constant_fn(n)

    def pipe(self, u, v):
        return self.pipe_fn(u, v)

    def star(self, u, v):
        return self.star_fn(u, v)


# ---------------------------------------------------------------------------
# axiom checking


def check_conway_axioms(alg, elements: Sequence | None = None, depth: int = 8) -> dict[str, bool]:
    """Verify C1-C7 (and the Traczyk four-element identity) on a window.

    For table algebras the check is exhaustive; for functional or polynomial
    algebras it runs over ``elements`` (default: the algebra's sample window,
    which for polynomial algebras holds independent indeterminates, so a pass
    is an identity of polynomials).
    """
    if elements is None:
        if isinstance(alg, FiniteConwayAlgebra):
            elements = alg.elements
        else:
            elements = alg.sample
        if not elements:
            raise AlgebraError("no elements to check the axioms on")
    out = {}
    consts = [alg.constant(i) for i in range(1, depth + 2)]
    out["C1"] = all(alg.pipe(consts[i], consts[i + 1]) == consts[i] for i in range(depth))
    out["C2"] = all(alg.star(consts[i], consts[i + 1]) == consts[i] for i in range(depth))
    pipe, star = alg.pipe, alg.star
    quads = list(itertools.product(elements, repeat=4))
    out["C3"] = all(pipe(pipe(a, b), pipe(c, d)) == pipe(pipe(a, c), pipe(b, d)) for a, b, c, d in quads)
    out["C4"] = all(star(pipe(a, b), pipe(c, d)) == pipe(star(a, c), star(b, d)) for a, b, c, d in quads)
    out["C5"] = all(star(star(a, b), star(c, d)) == star(star(a, c), star(b, d)) for a, b, c, d in quads)
    pairs = list(itertools.product(elements, repeat=2))
    out["C6"] = all(star(pipe(a, b), b) == a for a, b in pairs)
    out["C7"] = all(pipe(star(a, b), b) == a for a, b in pairs)
    out["traczyk"] = all(
        pipe(star(pipe(a, b), c), d) == pipe(star(pipe(a, d), c), b) for a, b, c, d in quads
    )
    return out


def check_pipe_star_inverse(alg: FiniteConwayAlgebra) -> bool:
    """For every b, x -> x|b and x -> x*b must be mutually inverse bijections."""
    n = alg.size
    for b in range(n):
        pipe_col = [alg.pipe_table[a][b] for a in range(n)]
        star_col = [alg.star_table[a][b] for a in range(n)]
        if sorted(pipe_col) != list(range(n)) or sorted(star_col) != list(range(n)):
            return False
        if any(star_col[pipe_col[a]] != a or pipe_col[star_col[a]] != a for a in range(n)):
            return False
    return True


def star_from_pipe(pipe_table) -> tuple:
    """Recover * as the columnwise inverse of | (the one-operation viewpoint)."""
    n = len(pipe_table)
    star = [[None] * n for _ in range(n)]
    for b in range(n):
        col = [pipe_table[a][b] for a in range(n)]
        if sorted(col) != list(range(n)):
            raise AlgebraError(f"column {b} of | is not a bijection")
        for a in range(n):
            star[col[a]][b] = a
    return tuple(tuple(row) for row in star)


AXIOM_NAMES = ("C1", "C2", "C3", "C4", "C5", "C6", "C7")

# implications between the axioms: (label, hypotheses, conclusion)
AXIOM_DEPENDENCIES = (
    ("a", ("C1", "C6"), "C2"),
    ("b", ("C2", "C7"), "C1"),
    ("c", ("C6", "C4"), "C7"),
    ("d", ("C7", "C4"), "C6"),
    ("e", ("C6", "C4"), "C5"),
    ("f", ("C7", "C4"), "C3"),
    ("g", ("C5", "C6", "C7"), "C4"),
    ("h", ("C3", "C6", "C7"), "C4"),
)


def axiom_counterexample(alg, axiom: str, elements: Sequence | None = None, depth: int = 8):
    """First witness violating the named axiom, or None if it holds on the window."""
    if elements is None:
        elements = alg.elements if isinstance(alg, FiniteConwayAlgebra) else alg.sample
    pipe, star = alg.pipe, alg.star
    if axiom in ("C1", "C2"):
        op = pipe if axiom == "C1" else star
        for i in range(1, depth + 1):
            if op(alg.constant(i), alg.constant(i + 1)) != alg.constant(i):
                return (i,)
        return None
    checks = {
        "C3": lambda a, b, c, d: pipe(pipe(a, b), pipe(c, d)) == pipe(pipe(a, c), pipe(b, d)),
        "C4": lambda a, b, c, d: star(pipe(a, b), pipe(c, d)) == pipe(star(a, c), star(b, d)),
        "C5": lambda a, b, c, d: star(star(a, b), star(c, d)) == star(star(a, c), star(b, d)),
        "C6": lambda a, b, c, d: star(pipe(a, b), b) == a,
        "C7": lambda a, b, c, d: pipe(star(a, b), b) == a,
        "traczyk": lambda a, b, c, d: pipe(star(pipe(a, b), c), d) == pipe(star(pipe(a, d), c), b),
    }
    check = checks[axiom]
    for quad in itertools.product(elements, repeat=4):
        if not check(*quad):
            return quad
    return None


def check_dependencies(structures: Iterable, depth: int = 4) -> dict[str, dict]:
    """Verify the eight axiom implications over a corpus of two-operation structures.

    Returns {label: {"applicable": count, "violations": [structures]}}; any
    violation would mean the implication table (or this library) is wrong.
    """
    out = {label: {"applicable": 0, "violations": []} for label, _, _ in AXIOM_DEPENDENCIES}
    for alg in structures:
        report = check_conway_axioms(alg, depth=depth)
        for label, hyps, conc in AXIOM_DEPENDENCIES:
            if all(report[h] for h in hyps):
                out[label]["applicable"] += 1
                if not report[conc]:
                    out[label]["violations"].append(alg)
    return out


# ---------------------------------------------------------------------------
# builtin Conway algebras


def component_count_algebra() -> FunctionalConwayAlgebra:
    """a_i = i with x|y = x*y = x: the invariant is the component count."""
    return FunctionalConwayAlgebra(
        "component_count",
        constant_fn=lambda n: n,
        pipe_fn=lambda u, v: u,
        star_fn=lambda u, v: u,
        sample=(1, 2, 3, 4),
    )


def global_linking_algebra() -> FunctionalConwayAlgebra:
    """Values (components, total linking); switching across components shifts linking."""

    def pipe(u, v):
        (a, b), (c, d) = u, v
        return (a, b + 1) if a > c else (a, b)

    def star(u, v):
        (a, b), (c, d) = u, v
        return (a, b - 1) if a > c else (a, b)

    return FunctionalConwayAlgebra(
        "global_linking",
        constant_fn=lambda n: (n, 0),
        pipe_fn=pipe,
        star_fn=star,
        sample=((1, 0), (2, 0), (2, 1), (3, -1)),
    )


def mod_algebra(n: int) -> FiniteConwayAlgebra:
    """Universe Z_n with a|b = a*b = 2b - a - 2 and a_i = i (mod n)."""
    if n < 2:
        raise AlgebraError("mod algebra needs n >= 2")
    elements = tuple(range(n))
    table = tuple(tuple((2 * b - a - 2) % n for b in range(n)) for a in range(n))
    period = tuple((i + 1) % n for i in range(n))
    return FiniteConwayAlgebra(f"mod{n}", elements, table, table, (), period)


def z3_algebra() -> FiniteConwayAlgebra:
    """The three-element algebra a|b = a*b = 1 - a - b (mod 3)."""
    elements = (0, 1, 2)
    table = tuple(tuple((1 - a - b) % 3 for b in range(3)) for a in range(3))
    return FiniteConwayAlgebra("z3", elements, table, table, (), (1, 2, 0))


def four_element_algebra() -> FiniteConwayAlgebra:
    """The four-element algebra on {0,1,2,s} separating the trefoils."""
    elements = (0, 1, 2, "s")
    pipe_rows = {0: ("s", 0, 2, 1), 1: (0, "s", 1, 2), 2: (2, 1, "s", 0), "s": (1, 2, 0, "s")}
    star_rows = {0: (1, 0, "s", 2), 1: ("s", 2, 1, 0), 2: (2, "s", 0, 1), "s": (0, 1, 2, "s")}
    idx = {e: i for i, e in enumerate(elements)}
    pipe = tuple(tuple(idx[v] for v in pipe_rows[e]) for e in elements)
    star = tuple(tuple(idx[v] for v in star_rows[e]) for e in elements)
    return FiniteConwayAlgebra("four_element", elements, pipe, star, (), (1, 2, 0))


def _poly_sample(variables):
    """Independent indeterminates used to check identities symbolically."""
    allvars = sorted(set(variables) | {"A_", "B_", "C_", "D_"})
    return tuple(LaurentPoly.var(v, variables=allvars) for v in ("A_", "B_", "C_", "D_"))


def homflypt_algebra() -> FunctionalConwayAlgebra:
    """Two-variable skein algebra: x*w(L+) + y*w(L-) = w(L0), a_n = (x+y)^(n-1)."""
    x = LaurentPoly.var("x", variables=("x", "y"))
    y = LaurentPoly.var("y", variables=("x", "y"))
    xinv, yinv = x.monomial_inverse(), y.monomial_inverse()
    s = x + y
    return FunctionalConwayAlgebra(
        "homflypt",
        constant_fn=lambda n: s ** (n - 1),
        pipe_fn=lambda u, v: (v - y * u) * xinv,
        star_fn=lambda u, v: (v - x * u) * yinv,
        sample=_poly_sample(("x", "y")),
    )


def morton_algebra() -> FunctionalConwayAlgebra:
    """Framed-variable skein algebra: v^-1 P+ - v P- = z P0, a_n = ((v^-1-v)/z)^(n-1)."""
    v = LaurentPoly.var("v", variables=("v", "z"))
    z = LaurentPoly.var("z", variables=("v", "z"))
    vinv, zinv = v.monomial_inverse(), z.monomial_inverse()
    delta = (vinv - v) * zinv
    return FunctionalConwayAlgebra(
        "morton",
        constant_fn=lambda n: delta ** (n - 1),
        pipe_fn=lambda u, w0: v * v * u + v * z * w0,
        star_fn=lambda u, w0: vinv * vinv * u - vinv * z * w0,
        sample=_poly_sample(("v", "z")),
    )


def xyz_algebra() -> FunctionalConwayAlgebra:
    """Three-variable extension x w1 + y w2 = w0 - z with polynomial constants."""
    x = LaurentPoly.var("x", variables=("x", "y", "z"))
    y = LaurentPoly.var("y", variables=("x", "y", "z"))
    z = LaurentPoly.var("z", variables=("x", "y", "z"))
    xinv, yinv = x.monomial_inverse(), y.monomial_inverse()
    s = x + y

    def constant(n):
        geom = sum((s ** j for j in range(n - 1)), LaurentPoly.zero(("x", "y", "z")))
        return s ** (n - 1) + z * geom

    return FunctionalConwayAlgebra(
        "xyz",
        constant_fn=constant,
        pipe_fn=lambda u, w0: (w0 - z - y * u) * xinv,
        star_fn=lambda u, w0: (w0 - z - x * u) * yinv,
        sample=_poly_sample(("x", "y", "z")),
    )


def homflypt3_algebra() -> FunctionalConwayAlgebra:
    """Three-variable skein algebra x w1 + y w2 = z w0 with a_n = ((x+y)/z)^(n-1).

    Values live in the Laurent ring in x, y, z; the homflypt form is the z=1
    specialization.
    """
    x = LaurentPoly.var("x", variables=("x", "y", "z"))
    y = LaurentPoly.var("y", variables=("x", "y", "z"))
    z = LaurentPoly.var("z", variables=("x", "y", "z"))
    xinv, yinv = x.monomial_inverse(), y.monomial_inverse()
    delta = (x + y) * z.monomial_inverse()
    return FunctionalConwayAlgebra(
        "homflypt3",
        constant_fn=lambda n: delta ** (n - 1),
        pipe_fn=lambda u, w0: (z * w0 - y * u) * xinv,
        star_fn=lambda u, w0: (z * w0 - x * u) * yinv,
        sample=_poly_sample(("x", "y", "z")),
    )


BUILTIN_ALGEBRAS: dict[str, Callable[[], object]] = {
    "component_count": component_count_algebra,
    "global_linking": global_linking_algebra,
    "z3": z3_algebra,
    "four_element": four_element_algebra,
    "homflypt": homflypt_algebra,
    "homflypt_xy": homflypt_algebra,
    "homflypt3": homflypt3_algebra,
    "homflypt_xyz": homflypt3_algebra,
    "linking_pair": global_linking_algebra,
    "morton": morton_algebra,
    "xyz": xyz_algebra,
}


def builtin(name: str, n: int | None = None):
    """Look up a builtin Conway algebra by name; mod_n takes the modulus n."""
    if name in ("mod_n", "mod"):
        if n is None:
            raise AlgebraError("mod_n needs the modulus n")
        return mod_algebra(n)
    if name.startswith("mod") and name[3:].isdigit():
        return mod_algebra(int(name[3:]))
    try:
        return BUILTIN_ALGEBRAS[name]()
    except KeyError:
        raise AlgebraError(f"unknown builtin algebra {name!r}") from None


def algebra_from_tables(text: str, name: str = "custom") -> FiniteConwayAlgebra:
    """Parse the table file format: ``n a1 .. ak`` then the | and * tables.

    All entries are 0-based indices into the universe {1, ..., n}; the
    constants a_1, a_2, ... repeat their listed tail periodically.
    """
    tokens = text.split()
    if not tokens:
        raise AlgebraError("empty algebra description")
    try:
        n = int(tokens[0])
        rest = [int(t) for t in tokens[1:]]
    except ValueError as exc:
        raise AlgebraError(f"non-integer token in algebra file: {exc}") from exc
    if len(rest) < 1 + 2 * n * n:
        raise AlgebraError("algebra file too short for the declared size")
    k = len(rest) - 2 * n * n
    consts = rest[:k]
    flat = rest[k:]
    if any(c < 0 or c >= n for c in consts):
        raise AlgebraError("constants outside the index range 0..n-1")
    grid = [flat[i * n:(i + 1) * n] for i in range(2 * n)]
    pipe = tuple(tuple(row) for row in grid[:n])
    star = tuple(tuple(row) for row in grid[n:])
    return FiniteConwayAlgebra(name, tuple(range(1, n + 1)), pipe, star, (), tuple(consts))


def algebra_to_tables(alg: FiniteConwayAlgebra) -> str:
    n = alg.size
    consts = list(alg.preperiod) + list(alg.period)
    head = " ".join([str(n)] + [str(c) for c in consts])
    rows = ["\n".join(" ".join(str(v) for v in row) for row in tbl)
            for tbl in (alg.pipe_table, alg.star_table)]
    return head + "\n" + rows[0] + "\n" + rows[1] + "\n"


check_axioms = check_conway_axioms


def check_traczyk_identity(alg, elements: Sequence | None = None):
    """((a|b)*c)|d = ((a|d)*c)|b; returns (holds, witness or None)."""
    witness = axiom_counterexample(alg, "traczyk", elements)
    return witness is None, witness


# ---------------------------------------------------------------------------
# magma laboratory: Bin(X), entropic sets, cores and conjugation


def op_from_table(table):
    return lambda a, b: table[a][b]


def bin_compose(op1, op2):
    """The monoid product on Bin(X): (a, b) -> (a op1 b) op2 b."""
    return lambda a, b: op2(op1(a, b), b)


def right_trivial_op(a, b):
    return a


def is_entropic_pair(op1, op2, universe) -> bool:
    """(a op1 b) op2 (c op1 d) == (a op2 c) op1 (b op2 d) for all a,b,c,d."""
    return all(
        op2(op1(a, b), op1(c, d)) == op1(op2(a, c), op2(b, d))
        for a, b, c, d in itertools.product(universe, repeat=4)
    )

def is_entropic_set(ops: Sequence, universe) -> bool:
    """Every ordered pair from ops (including equal pairs) must be entropic."""
    return all(is_entropic_pair(o1, o2, universe) for o1 in ops for o2 in ops)


def is_invertible_op(op, universe) -> bool:
    n = len(universe)
    return all(len({op(a, b) for a in universe}) == n for b in universe)


def inverse_op(op, universe):
    table = {b: {op(a, b): a for a in universe} for b in universe}
    return lambda a, b: table[b][a]


def generated_submonoid(ops: Sequence, universe, limit: int = 4096):
    """Close a set of operations under the Bin(X) product (and its identity)."""
    def key(op):
        return tuple(tuple(op(a, b) for b in universe) for a in universe)

    found = {key(right_trivial_op): right_trivial_op}
    frontier = [right_trivial_op]
    for op in ops:
        if key(op) not in found:
            found[key(op)] = op
            frontier.append(op)
    while frontier:
        op = frontier.pop()
        for other in list(found.values()):
            for candidate in (bin_compose(op, other), bin_compose(other, op)):
                k = key(candidate)
                if k not in found:
                    if len(found) >= limit:
                        raise AlgebraError("generated monoid exceeded the size limit")
                    table = [list(row) for row in k]
                    fixed = op_from_table(table)
                    found[k] = fixed
                    frontier.append(fixed)
    return list(found.values())


def entropic_closure_check(ops: Sequence, universe, word_length: int = 3) -> bool:
    """Entropic generating sets stay entropic under composition and inversion.

    Builds all composition words up to the given length from ops, adds the
    inverses of invertible members, and re-checks pairwise entropy.
    """
    if not is_entropic_set(ops, universe):
        return False
    words = list(ops)
    layer = list(ops)
    for _ in range(word_length - 1):
        layer = [bin_compose(w, o) for w in layer for o in ops]
        words.extend(layer)
    words.extend(inverse_op(o, universe) for o in ops if is_invertible_op(o, universe))
    return is_entropic_set(words, universe)


def idempotent_entropic_distributive_check(op, universe) -> dict[str, bool]:
    """Idempotent + self-entropic implies two-sided distributive; and a
    right-self-distributive quasigroup operation is idempotent."""
    report = {}
    idem = is_idempotent_op(op, universe)
    entropic = is_entropic_pair(op, op, universe)
    if idem and entropic:
        report["distributive"] = (is_left_distributive(op, universe)
                                  and is_right_distributive(op, universe))
    quasigroup = is_invertible_op(op, universe) and all(
        len({op(a, b) for b in universe}) == len(universe) for a in universe
    )
    if quasigroup and is_right_distributive(op, universe):
        report["idempotent"] = idem
    return report


def is_idempotent_op(op, universe) -> bool:
    return all(op(a, a) == a for a in universe)


def is_left_distributive(op, universe) -> bool:
    return all(
        op(a, op(b, c)) == op(op(a, b), op(a, c))
        for a, b, c in itertools.product(universe, repeat=3)
    )


def is_right_distributive(op, universe) -> bool:
    return all(
        op(op(a, b), c) == op(op(a, c), op(b, c))
        for a, b, c in itertools.product(universe, repeat=3)
    )


@dataclass(frozen=True)
class SmallGroup:
    name: str
    elements: tuple
    mul: dict
    inv: dict

    def op(self, a, b):
        return self.mul[(a, b)]


def _group_from_products(name, elements, product) -> SmallGroup:
    mul = {(a, b): product(a, b) for a in elements for b in elements}
    inv = {}
    identity = next(e for e in elements if all(mul[(e, x)] == x for x in elements))
    for a in elements:
        inv[a] = next(b for b in elements if mul[(a, b)] == identity)
    return SmallGroup(name, tuple(elements), mul, inv)


def quaternion_group() -> SmallGroup:
    """Q8 = {+-1, +-i, +-j, +-k}, encoded as (sign, unit)."""
    units = ["1", "i", "j", "k"]
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elements = [(s, u) for s in (1, -1) for u in units]

    def product(a, b):
        s, u = table[(a[1], b[1])]
        return (s * a[0] * b[0], u)

    return _group_from_products("Q8", elements, product)


def dihedral_group(n: int) -> SmallGroup:
    """D_n of order 2n: elements (r, s) acting as rotation r and flip s."""
    elements = [(r, s) for s in (0, 1) for r in range(n)]

    def product(a, b):
        (r1, s1), (r2, s2) = a, b
        if s1 == 0:
            return ((r1 + r2) % n, s2)
        return ((r1 - r2) % n, 1 - s2)

    return _group_from_products(f"D{n}", elements, product)


def symmetric_group_3() -> SmallGroup:
    perms = list(itertools.permutations(range(3)))

    def product(p, q):  # (p q)(x) = p(q(x))
        return tuple(p[q[i]] for i in range(3))

    return _group_from_products("S3", perms, product)


def core_magma(group: SmallGroup):
    """a * b = b a^{-1} b, with the companion anti-automorphism a -> a^{-1}."""
    op = lambda a, b: group.op(group.op(b, group.inv[a]), b)
    tau = lambda a: group.inv[a]
    return op, tau


def conjugation_magma(group: SmallGroup):
    """a * b = b^{-1} a b, with the identity as companion map."""
    op = lambda a, b: group.op(group.op(group.inv[b], a), b)
    tau = lambda a: a
    return op, tau


def check_twisted_entropic(op, tau, universe) -> dict[str, bool]:
    """The four compatibility laws for an invertible op with companion map tau.

    (1) (a*b)*c = (a*tau(c))*tau(b)
    (2) (a/b)/c = (a/tau(c))/tau(b)  where / is the inverse operation
    (3) (a*b)/c = (a/tau(c))*tau(b)
    (4) the pair {*, /} is entropic
    """
    if not is_invertible_op(op, universe):
        raise AlgebraError("operation is not invertible")
    div = inverse_op(op, universe)
    triples = list(itertools.product(universe, repeat=3))
    return {
        "law1": all(op(op(a, b), c) == op(op(a, tau(c)), tau(b)) for a, b, c in triples),
        "law2": all(div(div(a, b), c) == div(div(a, tau(c)), tau(b)) for a, b, c in triples),
        "law3": all(div(op(a, b), c) == op(div(a, tau(c)), tau(b)) for a, b, c in triples),
        "entropic_pair": is_entropic_set((op, div), universe),
    }
