"""Regular-isotopy invariants built from four-diagram smoothing relations.

Where the two-argument skein engine (``skeinlab.skein``) resolves a crossing
into a switch and the oriented smoothing, the engine here also takes the
disoriented smoothing into account.  Values of oriented diagrams live in a
universe A, values of unoriented diagrams in a universe A', and a crossing
resolves through a three-argument operation

    w(L) = star(w(L switched), w(L oriented-smoothed), w(L disoriented-smoothed))

with descending diagrams as leaves: a descending diagram with n components
and writhe j evaluates to the constant ``a[n, j]`` (or ``a'[n, j]`` for an
unoriented diagram).  The classical instances are the regular-isotopy
polynomial Lambda and its ambient normalization F, the one-variable Q
polynomial, the Dubrovnik variant, and the three-variable J polynomial that
carries the two-variable skein polynomial and F simultaneously.

The module also hosts the orientation-sum invariants g, G, G-hat, the
closed-form special value of F at z = -a-a^-1, and identity checkers
(axioms of the three-argument algebras, the Birman relation between the
Jones polynomials of L+, L-, L-infinity, and route-agreement checks).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional

from skeinlab.diagram import Crossing, DiagramError, LinkDiagram
from skeinlab.laurent import LaurentPoly
from skeinlab.skein import _clearing_substitute, homflypt, jones


# ---------------------------------------------------------------------------
# the generic three-argument engine


@dataclass(frozen=True)
class KauffmanAlgebra:
    """A two-universe algebra driving the three-argument resolving recursion.

    ``constant(n, j)`` and ``constant_unoriented(n, j)`` give the leaf values
    of descending diagrams with ``n`` components and writhe ``j``.  ``star``
    and ``star_prime`` combine (switched, oriented smoothing, disoriented
    smoothing) values; both receive the sign of the resolved crossing, which
    symmetric instances ignore.  ``phi`` maps oriented values to unoriented
    ones (forget the orientation).

    For finite instances ``universe``/``universe_unoriented`` list every
    element so the axioms can be checked exhaustively; polynomial instances
    instead provide ``samples``/``samples_unoriented`` containing fresh
    indeterminates (and constants), which checks the axioms as polynomial
    identities in those indeterminates.
    """

    name: str
    constant: Callable[[int, int], Any]
    constant_unoriented: Callable[[int, int], Any]
    star: Callable[[Any, Any, Any, int], Any]
    star_prime: Callable[[Any, Any, Any, int], Any]
    phi: Callable[[Any], Any]
    universe: Optional[tuple] = None
    universe_unoriented: Optional[tuple] = None
    samples: tuple = ()
    samples_unoriented: tuple = ()


def evaluate_kauffman(diagram: LinkDiagram, algebra: KauffmanAlgebra,
                      oriented: bool = True, cache: dict | None = None):
    """Value of the diagram under the three-argument resolving recursion.

    Each component is traversed forward from its lowest arc label (the
    stored arc direction), the first crossing met on its under-strand is
    resolved, and descending diagrams evaluate to the writhe-indexed
    constants.  ``oriented`` picks the universe; unoriented evaluation
    still walks the stored arc directions but combines with ``star_prime``,
    whose symmetry in the two smoothings makes the result independent of
    that choice.
    """
    if cache is None:
        cache = {}

    def run(d: LinkDiagram, mode: bool):
        key = (mode, d.canonical_key())
        hit = cache.get(key)
        if hit is not None:
            return hit
        i = d.first_bad_crossing()
        if i is None:
            n, j = d.n_components, d.writhe
            val = algebra.constant(n, j) if mode else algebra.constant_unoriented(n, j)
        else:
            sign = d.crossings[i].sign
            switched = run(d.switch_crossing(i), mode)
            smoothed = run(d.smooth_oriented(i), mode)
            crossed = run(d.smooth_disoriented(i), False)
            op = algebra.star if mode else algebra.star_prime
            val = op(switched, smoothed, crossed, sign)
        cache[key] = val
        return val

    return run(diagram, oriented)


# ---------------------------------------------------------------------------
# concrete algebras


def _av(power: int = 1) -> LaurentPoly:
    return LaurentPoly.var("a", power, variables=("a", "z"))


def _zv(power: int = 1) -> LaurentPoly:
    return LaurentPoly.var("z", power, variables=("a", "z"))


def lambda_algebra() -> KauffmanAlgebra:
    """The symmetric four-diagram relation w+ + w- = z(w0 + w-inf)."""
    a, z = _av(), _zv()
    mu = (a + _av(-1)) * _zv(-1) - 1

    def const(n: int, j: int) -> LaurentPoly:
        return mu ** (n - 1) * a ** j

    def star(b, c, d, sign):
        return z * (c + d) - b

    return KauffmanAlgebra("lambda", const, const, star, star, lambda x: x)


def dubrovnik_algebra() -> KauffmanAlgebra:
    """The antisymmetric variant w+ - w- = z(w0 - w-inf)."""
    a, z = _av(), _zv()
    mu = (a - _av(-1)) * _zv(-1) + 1

    def const(n: int, j: int) -> LaurentPoly:
        return mu ** (n - 1) * a ** j

    def star(b, c, d, sign):
        return b + sign * (z * (c - d))

    return KauffmanAlgebra("dubrovnik", const, const, star, star, lambda x: x)


def q_algebra() -> KauffmanAlgebra:
    """The one-variable relation w+ + w- = x(w0 + w-inf), blind to writhe."""
    x = LaurentPoly.var("x")
    mu = 2 * LaurentPoly.var("x", -1) - 1

    def const(n: int, j: int) -> LaurentPoly:
        return mu ** (n - 1)

    def star(b, c, d, sign):
        return x * (c + d) - b

    return KauffmanAlgebra("q", const, const, star, star, lambda x_: x_)


def _jck_constants():
    ring = ("a", "t", "z")
    a = LaurentPoly.var("a", variables=ring)
    t1 = LaurentPoly.var("t", -1, variables=ring)
    z = LaurentPoly.var("z", variables=ring)
    kappa = (LaurentPoly.var("a", -1, variables=ring) + a) * t1
    ap = LaurentPoly.var("a", variables=("a", "t"))
    kappa_p = (LaurentPoly.var("a", -1, variables=("a", "t")) + ap) \
        * LaurentPoly.var("t", -1, variables=("a", "t"))

    def oriented(n: int, j: int) -> LaurentPoly:
        return (kappa ** (n - 1) * (1 - z * t1)
                + z * t1 * (kappa - 1) ** (n - 1)) * a ** j

    def unoriented(n: int, j: int) -> LaurentPoly:
        return (kappa_p - 1) ** (n - 1) * ap ** j

    return oriented, unoriented


def jck_algebra(broken_phi: bool = False) -> KauffmanAlgebra:
    """The three-variable algebra with b*(c,d) = tc + zd - b.

    Oriented values live in Z[a^{±1}, t^{±1}, z], unoriented ones in
    Z[a^{±1}, t^{±1}]; forgetting orientation substitutes z -> t.  With
    ``broken_phi`` the forgetful map leaves z alone, which violates the
    compatibility axiom between the two universes (used as a negative
    control by the axiom checker).
    """
    t = LaurentPoly.var("t")
    z = LaurentPoly.var("z")
    oriented, unoriented = _jck_constants()

    def star(b, c, d, sign):
        return t * c + z * d - b

    def star_prime(b, c, d, sign):
        return t * (c + d) - b

    def phi(x):
        if "z" not in x.variables:
            return x
        return x.substitute({"z": z if broken_phi else t})

    name = "jck" if not broken_phi else "jck-broken-phi"
    samples = (LaurentPoly.var("u1"), oriented(2, 1))
    samples_unoriented = (LaurentPoly.var("v1"), unoriented(1, -1))
    return KauffmanAlgebra(name, oriented, unoriented, star, star_prime, phi,
                           samples=samples, samples_unoriented=samples_unoriented)


def trivial_kauffman_algebra() -> KauffmanAlgebra:
    """The one-element algebra: every value is 0 and every axiom holds."""
    return KauffmanAlgebra(
        "trivial",
        constant=lambda n, j: 0,
        constant_unoriented=lambda n, j: 0,
        star=lambda b, c, d, sign: 0,
        star_prime=lambda b, c, d, sign: 0,
        phi=lambda x_: 0,
        universe=(0,),
        universe_unoriented=(0,),
    )


# ---------------------------------------------------------------------------
# the polynomial invariants


def lambda_poly(diagram: LinkDiagram, cache: dict | None = None) -> LaurentPoly:
    """Regular-isotopy polynomial in a, z; a single curl scales it by a^±1."""
    return evaluate_kauffman(diagram, lambda_algebra(), cache=cache)


def kauffman_f(diagram: LinkDiagram, cache: dict | None = None) -> LaurentPoly:
    """Ambient-isotopy normalization F = a^{-w} Lambda."""
    return LaurentPoly.var("a", -diagram.writhe) * lambda_poly(diagram, cache=cache)


def q_poly(diagram: LinkDiagram, cache: dict | None = None) -> LaurentPoly:
    """The one-variable unoriented polynomial, by its own direct recursion."""
    return evaluate_kauffman(diagram, q_algebra(), cache=cache)


def q_routes_agree(diagram: LinkDiagram) -> bool:
    """Direct Q recursion equals F specialized at a = 1 (z renamed to x)."""
    via_f = kauffman_f(diagram).substitute({"a": 1})
    if "z" in via_f.variables:
        via_f = via_f.substitute({"z": LaurentPoly.var("x")})
    return q_poly(diagram) == via_f


def dubrovnik(diagram: LinkDiagram, cache: dict | None = None) -> LaurentPoly:
    """The minus-sign variant of F, normalized the same way (a^{-w})."""
    reg = evaluate_kauffman(diagram, dubrovnik_algebra(), cache=cache)
    return LaurentPoly.var("a", -diagram.writhe) * reg


def dubrovnik_special_value(diagram: LinkDiagram) -> dict[str, LaurentPoly]:
    """The value of the Dubrovnik polynomial at (i*a, i*(a - a^-1)).

    Substituting a -> i*a and z -> i*(a - a^-1) (i the imaginary unit) turns
    every term c*a^p*z^q into c * i^(p+q) * a^p * (a - a^-1)^q.  The result is
    returned as separate real and imaginary parts (both in Z[a^{±1}]); no
    closed form is asserted here, the value is reported as data.
    """
    fstar = dubrovnik(diagram)
    av = LaurentPoly.var("a")
    binom = av - LaurentPoly.var("a", -1)
    real = LaurentPoly.zero(("a",))
    imag = LaurentPoly.zero(("a",))
    for exp, coeff in fstar.terms.items():
        mono = dict(zip(fstar.variables, exp))
        p, q = mono.get("a", 0), mono.get("z", 0)
        term = coeff * av ** p * binom ** q
        k = (p + q) % 4
        if k == 0:
            real = real + term
        elif k == 1:
            imag = imag + term
        elif k == 2:
            real = real - term
        else:
            imag = imag - term
    return {"real": real, "imag": imag}


# ---------------------------------------------------------------------------
# orientation-sum invariants


def _component_subsets(diagram: LinkDiagram):
    n = len(diagram.components)
    for r in range(n + 1):
        yield from itertools.combinations(range(n), r)


def g_sum(diagram: LinkDiagram) -> LaurentPoly:
    """Sum of (-1)^cp a^writhe over every orientation of the diagram.

    An invariant of regular isotopy of the underlying unoriented diagram;
    free loops contribute a factor -2 each (two orientations, no crossings).
    """
    total = LaurentPoly.zero(("a",))
    for subset in _component_subsets(diagram):
        w = diagram.reverse(subset).writhe if subset else diagram.writhe
        total = total + LaurentPoly.var("a", w)
    sign = -1 if diagram.n_components % 2 else 1
    return sign * (2 ** diagram.free_loops) * total


def f_special(diagram: LinkDiagram) -> LaurentPoly:
    """Closed form for F at z = -a - a^-1 from global linking numbers.

    Returns ((-1)^(cp-1) / 2) * sum over all sublinks S (including the empty
    one) of a^(-4 lk(S, L-S)).  The sublink sum pairs S with its complement,
    so the division by two is exact.
    """
    counts: dict[int, int] = {}
    for subset in _component_subsets(diagram):
        e = int(-4 * diagram.total_linking(subset))
        counts[e] = counts.get(e, 0) + 1
    mult = 2 ** diagram.free_loops
    sign = 1 if (diagram.n_components - 1) % 2 == 0 else -1
    terms = {}
    for e, cnt in counts.items():
        total = cnt * mult
        if total % 2:
            raise DiagramError("sublink sum is not evenly paired")
        terms[(e,)] = sign * (total // 2)
    return LaurentPoly(("a",), terms)


def f_special_check(diagram: LinkDiagram) -> bool:
    """F_L(a, -a-a^-1) computed by recursion equals the sublink closed form."""
    a = LaurentPoly.var("a")
    image = -a - LaurentPoly.var("a", -1)
    lhs = _clearing_substitute(kauffman_f(diagram), "z", {"z": image})
    return lhs == f_special(diagram)


def ghat(diagram: LinkDiagram) -> LaurentPoly:
    """The sublink generating function sum_S x^cp(S) a^(-4 lk(S, L-S))."""
    base = LaurentPoly.zero(("a", "x"))
    for subset in _component_subsets(diagram):
        e = int(-4 * diagram.total_linking(subset))
        base = base + LaurentPoly(("a", "x"), {(e, len(subset)): 1})
    loop_factor = (1 + LaurentPoly.var("x")) ** diagram.free_loops
    return base * loop_factor


def g_identity_check(diagram: LinkDiagram, i: int) -> dict[str, bool]:
    """The four G relations at crossing ``i`` of the diagram.

    For a self-crossing:  G(D+) - G(D-) = (a^-1 - a)(G(D0) + G(Dinf))  and
    a^-1 G(D+) = a G(D-).  For a mixed crossing (the positive diagram being
    the one whose oriented smoothing is D0):  G(D+) - G(D-) =
    (a^-1 - a)(G(D0) - G(Dinf))  and  a G(D+) - a^-1 G(D-) = (a^-2 - a^2) G(D0).
    """
    plus = diagram if diagram.crossings[i].sign > 0 else diagram.switch_crossing(i)
    minus = plus.switch_crossing(i)
    g_p, g_m = g_sum(plus), g_sum(minus)
    g_0 = g_sum(plus.smooth_oriented(i))
    g_inf = g_sum(plus.smooth_disoriented(i))
    a = LaurentPoly.var("a")
    ai = LaurentPoly.var("a", -1)
    if diagram.is_self_crossing(i):
        return {
            "difference": g_p - g_m == (ai - a) * (g_0 + g_inf),
            "proportionality": ai * g_p == a * g_m,
        }
    return {
        "difference": g_p - g_m == (ai - a) * (g_0 - g_inf),
        "smoothing": a * g_p - ai * g_m
        == (LaurentPoly.var("a", -2) - a ** 2) * g_0,
    }


# ---------------------------------------------------------------------------
# the three-variable polynomial and its specializations


def jck_poly(diagram: LinkDiagram, cache: dict | None = None):
    """The three-variable polynomial (regular form J, ambient form a^{-w} J)."""
    j = evaluate_kauffman(diagram, jck_algebra(), cache=cache)
    return j, LaurentPoly.var("a", -diagram.writhe) * j


def _homflypt_in_at(diagram: LinkDiagram) -> LaurentPoly:
    """The two-variable skein polynomial at x = a/t, y = 1/(at).

    The positive sign of the second image is forced empirically: under this
    package's conventions for the skein polynomial and for J, the ambient
    z = 0 specialization of J equals P at (a/t, +1/(at)) on every test
    diagram, and fails with the sign flipped.
    """
    at = LaurentPoly.var("a", variables=("a", "t"))
    ti = LaurentPoly.var("t", -1, variables=("a", "t"))
    return homflypt(diagram).substitute({
        "x": at * ti,
        "y": LaurentPoly.var("a", -1, variables=("a", "t")) * ti,
    })


def jck_consistency_report(diagram: LinkDiagram) -> dict[str, bool]:
    """The three structural identities tying J to the other invariants.

    ``interpolation``:  J(a,t,z) = J(a,t,0) + z (J(a,t,t) - J(a,t,0)) / t —
    J is linear in z.  ``skein_specialization``: the ambient form at z = 0 is
    the two-variable skein polynomial at (a/t, -1/(at)).  ``f_specialization``:
    J at z = t is the regular-isotopy form a^w F(a, t).
    """
    j, jt = jck_poly(diagram)
    has_z = "z" in j.variables
    j0 = j.substitute({"z": 0}) if has_z else j
    jdiag = j.substitute({"z": LaurentPoly.var("t")}) if has_z else j
    z = LaurentPoly.var("z")
    interpolation = j == j0 + z * LaurentPoly.var("t", -1) * (jdiag - j0)
    jt0 = jt.substitute({"z": 0}) if "z" in jt.variables else jt
    skein = jt0 == _homflypt_in_at(diagram)
    f_at = lambda_poly(diagram).substitute({"z": LaurentPoly.var("t")}) \
        if "z" in lambda_poly(diagram).variables \
        else lambda_poly(diagram)
    f_spec = jdiag == f_at
    return {
        "interpolation": interpolation,
        "skein_specialization": skein,
        "f_specialization": f_spec,
    }


def jones_via_kauffman(diagram: LinkDiagram) -> LaurentPoly:
    """Jones polynomial in q (t = q^4) through F at a = q^-3, z = -(q + q^-1).

    The a-image is the inverse cube because this package's Jones
    normalization assigns positive q-powers to the right trefoil while F
    assigns it negative a-powers; the two conventions are mirror to each
    other, and a -> q^-3 reconciles them exactly on the whole corpus.
    """
    q = LaurentPoly.var("q")
    images = {"a": q ** -3, "z": -(q + q ** -1)}
    return _clearing_substitute(kauffman_f(diagram), "z", images)


def jones_via_jck(diagram: LinkDiagram) -> LaurentPoly:
    """Jones polynomial in q recovered through the three-variable polynomial.

    J at z = t is the regular form a^w F(a, t); normalizing by a^{-w} and
    substituting a -> q^-3, t -> -(q + q^-1) must reproduce the skein-route
    Jones polynomial exactly.
    """
    j, jt = jck_poly(diagram)
    f = jt.substitute({"z": LaurentPoly.var("t")}) if "z" in jt.variables else jt
    q = LaurentPoly.var("q")
    images = {"a": q ** -3, "t": -(q + q ** -1)}
    return _clearing_substitute(f, "t", images)


def g_route_check(diagram: LinkDiagram) -> bool:
    """The orientation-sum route to the special value of F.

    Checks g_sum(D) = -2 a^w F_D(a, -a-a^-1): the unoriented orientation-sum
    invariant determines F at z = -a-a^-1 up to the writhe normalization.
    """
    a = LaurentPoly.var("a")
    lam = _clearing_substitute(kauffman_f(diagram), "z", {"z": -a - a ** -1})
    return g_sum(diagram) == -2 * a ** diagram.writhe * lam


def birman_vinfty_check(diagram: LinkDiagram, p: int) -> bool:
    """The Jones relation between L+, L-, and the disoriented smoothing at p.

    With t = q^4 the relation reads, for a self-crossing,
        q^2 V(L+) - q^-2 V(L-) = (q^2 - q^-2) q^(-12 lambda) V(Linf),
    lambda being the linking number of the new component of L0 that the
    disorientation reverses with the rest of L0; for a mixed crossing the
    exponent is -12 lambda + 6 with lambda the linking number of the reversed
    component of L+ with the rest of L+.  Raises DiagramError when the
    smoothing is degenerate (a curl, where no reversed arc survives).
    """
    plus = diagram if diagram.crossings[p].sign > 0 else diagram.switch_crossing(p)
    minus = plus.switch_crossing(p)
    inf = plus.smooth_disoriented(p)
    q = LaurentPoly.var("q")
    lhs = q ** 2 * jones(plus) - q ** -2 * jones(minus)
    reversed_arcs = plus.disoriented_reversed_side(p)
    if plus.is_self_crossing(p):
        zero = plus.smooth_oriented(p)
        surviving = [a for a in reversed_arcs if a in set(zero.arcs)]
        if not surviving:
            raise DiagramError(f"degenerate smoothing at crossing {p}: "
                               "no reversed arc survives into the smoothing")
        lam = zero.total_linking({zero.component_of[surviving[0]]})
        exponent = -12 * lam
    else:
        comp = plus.component_of[plus.crossings[p].over_in]
        lam = plus.total_linking({comp})
        exponent = -12 * lam + 6
    if exponent != int(exponent):
        raise DiagramError(f"non-integral balancing exponent {exponent}")
    rhs = (q ** 2 - q ** -2) * q ** int(exponent) * jones(inf)
    return lhs == rhs


def regular_R_poly(diagram: LinkDiagram) -> LaurentPoly:
    """The regular-isotopy form a^w P(a/z, -1/(az)) of the skein polynomial.

    Satisfies R(L+) - R(L-) = z R(L0) and gains a factor a^± under a curl.
    """
    az = LaurentPoly.var("a", variables=("a", "z"))
    zi = LaurentPoly.var("z", -1, variables=("a", "z"))
    g = homflypt(diagram).substitute({
        "x": az * zi,
        "y": -(LaurentPoly.var("a", -1, variables=("a", "z")) * zi),
    })
    return LaurentPoly.var("a", diagram.writhe) * g


# ---------------------------------------------------------------------------
# axiom checking


def _pairs(*pools):
    return itertools.product(*pools)


def check_kauffman_axioms(algebra: KauffmanAlgebra,
                          n_range: tuple[int, int] = (1, 4),
                          j_range: tuple[int, int] = (-3, 3)) -> dict[str, dict]:
    """Per-axiom report {name: {"holds": bool, "witness": ...}} for K1-K6.

    K1 (phi of constants), K3 (the constant recursion) are checked on the
    given index grid; K2, K4, K5, K6 run over the full universe for finite
    instances and over the declared polynomial samples otherwise, where
    holding for fresh indeterminates is a symbolic proof.
    """
    report: dict[str, dict] = {}

    def record(name, holds, witness=None):
        report[name] = {"holds": holds, "witness": None if holds else witness}

    ns = range(n_range[0], n_range[1] + 1)
    js = range(j_range[0], j_range[1] + 1)

    witness = None
    for n, j in itertools.product(ns, js):
        if algebra.phi(algebra.constant(n, j)) != algebra.constant_unoriented(n, j):
            witness = ("K1", n, j)
            break
    record("K1", witness is None, witness)

    pool_a = algebra.universe if algebra.universe is not None else algebra.samples
    pool_p = (algebra.universe_unoriented
              if algebra.universe_unoriented is not None
              else algebra.samples_unoriented)

    witness = None
    for a, b in _pairs(pool_a, pool_a):
        for c in pool_p:
            lhs = algebra.phi(algebra.star(a, b, c, 1))
            rhs = algebra.star_prime(algebra.phi(a), algebra.phi(b), c, 1)
            if lhs != rhs:
                witness = ("K2", a, b, c)
                break
        if witness:
            break
    record("K2", witness is None, witness)

    witness = None
    for n, j in itertools.product(ns, js):
        lhs = algebra.star(algebra.constant(n, j - 1),
                           algebra.constant(n + 1, j),
                           algebra.constant_unoriented(n, j), 1)
        if lhs != algebra.constant(n, j + 1):
            witness = ("K3", n, j)
            break
    record("K3", witness is None, witness)

    witness = None
    for a, b, d, e in _pairs(pool_a, pool_a, pool_a, pool_a):
        for c, f, g, h, i in _pairs(pool_p, pool_p, pool_p, pool_p, pool_p):
            lhs = algebra.star(algebra.star(a, b, c, 1),
                               algebra.star(d, e, f, 1),
                               algebra.star_prime(g, h, i, 1), 1)
            rhs = algebra.star(algebra.star(a, d, g, 1),
                               algebra.star(b, e, h, 1),
                               algebra.star_prime(c, f, i, 1), 1)
            if lhs != rhs:
                witness = ("K4", a, b, c, d, e, f, g, h, i)
                break
        if witness:
            break
    record("K4", witness is None, witness)

    witness = None
    for a, b in _pairs(pool_a, pool_a):
        for c in pool_p:
            if algebra.star(algebra.star(a, b, c, 1), b, c, 1) != a:
                witness = ("K5", a, b, c)
                break
        if witness:
            break
    record("K5", witness is None, witness)

    witness = None
    for a, b, c in _pairs(pool_p, pool_p, pool_p):
        if algebra.star_prime(a, b, c, 1) != algebra.star_prime(a, c, b, 1):
            witness = ("K6", a, b, c)
            break
    record("K6", witness is None, witness)

    return report


# ---------------------------------------------------------------------------
# diagram surgery for regular-isotopy testing


def _is_realizable(diagram: LinkDiagram) -> bool:
    for piece in diagram.connected_pieces():
        if piece.crossings and len(piece.faces) - len(piece.crossings) != 2:
            return False
    return True


def insert_curl(diagram: LinkDiagram, arc: int, sign: int) -> LinkDiagram:
    """Add a single curl of the given sign on ``arc`` (a Reidemeister-1 kink)."""
    fresh = max(diagram.arcs) + 1
    n1, n2 = fresh, fresh + 1
    base, done = [], False
    for cr in diagram.crossings:
        if not done and cr.under_in == arc:
            cr, done = Crossing(n2, cr.under_out, cr.over_in, cr.over_out, cr.sign), True
        elif not done and cr.over_in == arc:
            cr, done = Crossing(cr.under_in, cr.under_out, n2, cr.over_out, cr.sign), True
        base.append(cr)
    if not done:
        raise DiagramError(f"arc {arc} has no head crossing")
    for kink in (Crossing(arc, n1, n1, n2, sign), Crossing(n1, n2, arc, n1, sign)):
        cand = LinkDiagram(tuple(base + [kink]), diagram.free_loops)
        if _is_realizable(cand) and cand.writhe == diagram.writhe + sign:
            return cand
    raise DiagramError(f"no realizable curl on arc {arc} with sign {sign}")


def balanced_move_check(diagram: LinkDiagram, arc_a: int, arc_b: int) -> bool:
    """Lambda is unchanged by inserting a +1 curl on one arc, -1 on another."""
    moved = insert_curl(insert_curl(diagram, arc_a, 1), arc_b, -1)
    return lambda_poly(moved) == lambda_poly(diagram)
