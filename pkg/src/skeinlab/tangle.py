"""2-string tangles: integer tangles, sums, closures, fractions, mutation.

A 2-tangle is a diagram fragment with four boundary endpoints at corners
NW, NE, SW, SE.  Each corner is marked "in" (the strand flows into the
fragment there) or "out".  A tangle is *alternating* when the corners carry
the pattern NW in, NE out, SW out, SE in -- the orientation pattern under
which tangle sums and both closures glue without reversing any strand.

Conventions fixed here (the paper-of-record for this module):
  - tangle_sum(A, B) places B to the right of A, gluing A.NE->B.NW on top
    and B.SW->A.SE on the bottom;
  - numerator closure joins NW-NE and SW-SE; denominator joins NW-SW, NE-SE;
  - integer_tangle(n) is a row of |n| horizontal twists, positive n giving
    the handedness with Conway polynomial z for the numerator of [2];
  - strand reversals needed to make a gluing orientation-consistent are
    applied automatically; an unresolvable clash raises TangleError.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from skeinlab.diagram import Crossing, DiagramError, LinkDiagram, _reverse_passes
from skeinlab.laurent import LaurentPoly
from skeinlab.skein import conway_poly, homflypt

CORNERS = ("NW", "NE", "SW", "SE")

AXIS_CORNER_SWAP = {
    "z": {"NW": "SE", "SE": "NW", "NE": "SW", "SW": "NE"},
    "y": {"NW": "NE", "NE": "NW", "SW": "SE", "SE": "SW"},
    "x": {"NW": "SW", "SW": "NW", "NE": "SE", "SE": "NE"},
}


class TangleError(DiagramError):
    pass


@dataclass(frozen=True)
class Tangle2:
    crossings: tuple
    corners: dict  # corner name -> arc label
    directions: dict  # corner name -> "in" | "out"
    free_loops: int = 0

    def __post_init__(self):
        if set(self.corners) != set(CORNERS) or set(self.directions) != set(CORNERS):
            raise TangleError("a 2-tangle needs all four corners NW, NE, SW, SE")
        if any(d not in ("in", "out") for d in self.directions.values()):
            raise TangleError("corner directions must be 'in' or 'out'")
        heads: dict[int, int] = {}
        tails: dict[int, int] = {}
        for cr in self.crossings:
            for a in (cr.under_in, cr.over_in):
                heads[a] = heads.get(a, 0) + 1
            for a in (cr.under_out, cr.over_out):
                tails[a] = tails.get(a, 0) + 1
        for c in CORNERS:
            a = self.corners[c]
            if self.directions[c] == "in":
                tails[a] = tails.get(a, 0) + 1
            else:
                heads[a] = heads.get(a, 0) + 1
        arcs = set(heads) | set(tails)
        for a in arcs:
            if heads.get(a, 0) != 1 or tails.get(a, 0) != 1:
                raise TangleError(f"arc {a} is not a simple strand segment")

    @property
    def arcs(self) -> tuple[int, ...]:
        out = set(self.corners.values())
        for cr in self.crossings:
            out |= cr.arcs()
        return tuple(sorted(out))

    @property
    def is_alternating(self) -> bool:
        want = {"NW": "in", "NE": "out", "SW": "out", "SE": "in"}
        return self.directions == want

    def _head_at(self):
        out = {}
        for i, cr in enumerate(self.crossings):
            out[cr.under_in] = (i, "under")
            out[cr.over_in] = (i, "over")
        return out

    def open_strands(self) -> tuple:
        """(entry corner, exit corner, arcs) for each of the two open strands."""
        head_at = self._head_at()
        out_corner_of = {self.corners[c]: c for c in CORNERS if self.directions[c] == "out"}
        strands = []
        for c in CORNERS:
            if self.directions[c] != "in":
                continue
            a = self.corners[c]
            arcs = [a]
            while a not in out_corner_of or (a == self.corners[c] and len(arcs) == 1 and a in head_at):
                if a not in head_at:
                    break
                i, kind = head_at[a]
                cr = self.crossings[i]
                a = cr.under_out if kind == "under" else cr.over_out
                arcs.append(a)
            if a not in out_corner_of:
                raise TangleError(f"strand from {c} does not exit the tangle")
            strands.append((c, out_corner_of[a], tuple(arcs)))
        if len(strands) != 2:
            raise TangleError("a 2-tangle must have exactly two open strands")
        return tuple(strands)

    def reverse_strand(self, corner: str) -> "Tangle2":
        """Reverse the open strand through the given corner."""
        for c_in, c_out, arcs in self.open_strands():
            if corner in (c_in, c_out):
                crossings = tuple(_reverse_passes(self.crossings, set(arcs)))
                directions = dict(self.directions)
                directions[c_in] = "out"
                directions[c_out] = "in"
                return Tangle2(crossings, dict(self.corners), directions, self.free_loops)
        raise TangleError(f"no open strand passes through corner {corner}")

    def relabelled(self, offset: int) -> "Tangle2":
        crossings = tuple(
            Crossing(cr.under_in + offset, cr.under_out + offset,
                     cr.over_in + offset, cr.over_out + offset, cr.sign)
            for cr in self.crossings
        )
        corners = {c: a + offset for c, a in self.corners.items()}
        return Tangle2(crossings, corners, dict(self.directions), self.free_loops)


_ROTATE_CCW = {"NW": "SW", "SW": "SE", "SE": "NE", "NE": "NW"}


def rotate(tangle: Tangle2, quarter_turns: int = 1) -> Tangle2:
    """Rotate the tangle in the plane by 90° counterclockwise steps.

    Crossing data is intrinsic to the fragment, so only the corner and
    direction labels move.
    """
    t = tangle
    for _ in range(quarter_turns % 4):
        corners = {_ROTATE_CCW[c]: t.corners[c] for c in CORNERS}
        directions = {_ROTATE_CCW[c]: t.directions[c] for c in CORNERS}
        t = Tangle2(t.crossings, corners, directions, t.free_loops)
    return t


# ---------------------------------------------------------------------------
# basic tangles


def integer_tangle(n: int, sign: int | None = None) -> Tangle2:
    """A row of |n| horizontal half-twists between two strands."""
    if n == 0:
        return Tangle2((), {"NW": 1, "NE": 1, "SW": 2, "SE": 2},
                       {"NW": "in", "NE": "out", "SW": "out", "SE": "in"})
    s = sign if sign is not None else (1 if n > 0 else -1)
    m = abs(n)
    a = list(range(1, m + 2))           # top strand, left to right
    b = list(range(m + 2, 2 * m + 3))   # second strand
    crossings = []
    if m % 2 == 0:
        # antiparallel: top runs NW->NE, bottom runs SE->SW
        corners = {"NW": a[0], "NE": a[m], "SE": b[0], "SW": b[m]}
        directions = {"NW": "in", "NE": "out", "SE": "in", "SW": "out"}
        for j in range(1, m + 1):
            seg_a, seg_b = (a[j - 1], a[j]), (b[m - j], b[m - j + 1])
            # which strand passes over alternates along the row and flips
            # with the handedness, keeping every crossing planar-realizable
            over_is_a = (j % 2 == 1) ^ (s < 0)
            (op, oo), (up, uo) = (seg_a, seg_b) if over_is_a else (seg_b, seg_a)
            crossings.append(Crossing(up, uo, op, oo, s))
    else:
        # parallel: NW->SE and SW->NE
        corners = {"NW": a[0], "SE": a[m], "SW": b[0], "NE": b[m]}
        directions = {"NW": "in", "SE": "out", "SW": "in", "NE": "out"}
        for j in range(1, m + 1):
            seg_a, seg_b = (a[j - 1], a[j]), (b[j - 1], b[j])
            over_is_a = (j % 2 == 0) ^ (s < 0)
            (op, oo), (up, uo) = (seg_a, seg_b) if over_is_a else (seg_b, seg_a)
            crossings.append(Crossing(up, uo, op, oo, s))
    return Tangle2(tuple(crossings), corners, directions)


def vertical_tangle(n: int, sign: int | None = None) -> Tangle2:
    """A column of |n| vertical half-twists; n = 0 is the infinity tangle."""
    if n == 0:
        return Tangle2((), {"NW": 1, "SW": 1, "SE": 2, "NE": 2},
                       {"NW": "in", "SW": "out", "SE": "in", "NE": "out"})
    s = sign if sign is not None else (1 if n > 0 else -1)
    m = abs(n)
    a = list(range(1, m + 2))
    b = list(range(m + 2, 2 * m + 3))
    crossings = []
    if m % 2 == 0:
        # antiparallel: left runs NW->SW (down), right runs SE->NE (up)
        corners = {"NW": a[0], "SW": a[m], "SE": b[0], "NE": b[m]}
        directions = {"NW": "in", "SW": "out", "SE": "in", "NE": "out"}
        for j in range(1, m + 1):
            seg_a, seg_b = (a[j - 1], a[j]), (b[m - j], b[m - j + 1])
            over_is_a = (j % 2 == 0) ^ (s < 0)
            (op, oo), (up, uo) = (seg_a, seg_b) if over_is_a else (seg_b, seg_a)
            crossings.append(Crossing(up, uo, op, oo, s))
    else:
        # parallel: NW->SE and NE->SW, both running downward
        corners = {"NW": a[0], "SE": a[m], "NE": b[0], "SW": b[m]}
        directions = {"NW": "in", "SE": "out", "NE": "in", "SW": "out"}
        for j in range(1, m + 1):
            seg_a, seg_b = (a[j - 1], a[j]), (b[j - 1], b[j])
            over_is_a = (j % 2 == 1) ^ (s < 0)
            (op, oo), (up, uo) = (seg_a, seg_b) if over_is_a else (seg_b, seg_a)
            crossings.append(Crossing(up, uo, op, oo, s))
    return Tangle2(tuple(crossings), corners, directions)


# ---------------------------------------------------------------------------
# gluing


def _merge_arcs(crossings, corner_arcs, pairs, directions):
    """Merge arcs across glued corner pairs; returns (crossings, merged loops).

    Each pair must join one "in" and one "out" corner; the in-side arc is
    renamed to the out-side arc.  A pair whose arcs already coincide closes a
    free loop.
    """
    parent: dict[int, int] = {}

    def find(x):
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    loops = 0
    for c1, c2 in pairs:
        d1, d2 = directions[c1], directions[c2]
        if {d1, d2} != {"in", "out"}:
            raise TangleError(f"orientation clash gluing {c1} ({d1}) to {c2} ({d2})")
        out_c = c1 if d1 == "out" else c2
        in_c = c2 if out_c == c1 else c1
        u, v = find(corner_arcs[out_c]), find(corner_arcs[in_c])
        if u == v:
            loops += 1
        else:
            parent[v] = u
    renamed = tuple(
        Crossing(find(cr.under_in), find(cr.under_out),
                 find(cr.over_in), find(cr.over_out), cr.sign)
        for cr in crossings
    )
    return renamed, loops, find


def _with_flips(tangle: Tangle2, pairs, fixed_corners=()):
    """Try strand reversals (never touching fixed corners) until every glue
    pair joins an "in" to an "out"; returns the adjusted tangle."""
    strands = tangle.open_strands()
    candidates = [s for s in strands if not ({s[0], s[1]} & set(fixed_corners))]
    for k in range(len(candidates) + 1):
        for combo in itertools.combinations(candidates, k):
            t = tangle
            for s in combo:
                t = t.reverse_strand(s[0])
            if all({t.directions[c1], t.directions[c2]} == {"in", "out"} for c1, c2 in pairs):
                return t
    raise TangleError(f"orientation clash: cannot glue {pairs}")


def _close(tangle: Tangle2, pairs):
    t = _with_flips(tangle, pairs)
    crossings, loops, find = _merge_arcs(t.crossings, t.corners, pairs, t.directions)
    return LinkDiagram(crossings, t.free_loops + loops), find


def numerator(tangle: Tangle2) -> LinkDiagram:
    """Close the tangle joining NW-NE on top and SW-SE on the bottom."""
    return _close(tangle, (("NW", "NE"), ("SW", "SE")))[0]


def denominator(tangle: Tangle2) -> LinkDiagram:
    """Close the tangle joining NW-SW on the left and NE-SE on the right."""
    return _close(tangle, (("NW", "SW"), ("NE", "SE")))[0]


def tangle_sum(a: Tangle2, b: Tangle2) -> Tangle2:
    """Horizontal composition: B to the right of A."""
    offset = (max(a.arcs) if a.arcs else 0) + 1
    return _tangle_sum_tracked(a, b.relabelled(offset))[0]


def _tangle_sum_tracked(a: Tangle2, b: Tangle2):
    """Sum two tangles with disjoint arc labels; also return the arc rename map."""
    # reverse strands (B first, then A) until both glue seams are in-to-out
    candidates = [("b", s) for s in b.open_strands()] + [("a", s) for s in a.open_strands()]
    adjusted = None
    for k in range(len(candidates) + 1):
        for combo in itertools.combinations(candidates, k):
            at, bt = a, b
            for side, s in combo:
                if side == "a":
                    at = at.reverse_strand(s[0])
                else:
                    bt = bt.reverse_strand(s[0])
            if ({at.directions["NE"], bt.directions["NW"]} == {"in", "out"}
                    and {bt.directions["SW"], at.directions["SE"]} == {"in", "out"}):
                adjusted = (at, bt)
                break
        if adjusted is not None:
            break
    if adjusted is None:
        raise TangleError("orientation clash: cannot sum the tangles")
    a, b = adjusted
    all_corner_arcs = {"A_NE": a.corners["NE"], "A_SE": a.corners["SE"],
                       "B_NW": b.corners["NW"], "B_SW": b.corners["SW"]}
    all_dirs = {"A_NE": a.directions["NE"], "A_SE": a.directions["SE"],
                "B_NW": b.directions["NW"], "B_SW": b.directions["SW"]}
    crossings = a.crossings + b.crossings
    crossings, loops, find = _merge_arcs(
        crossings, all_corner_arcs, (("A_NE", "B_NW"), ("B_SW", "A_SE")), all_dirs)
    corners = {"NW": find(a.corners["NW"]), "SW": find(a.corners["SW"]),
               "NE": find(b.corners["NE"]), "SE": find(b.corners["SE"])}
    directions = {"NW": a.directions["NW"], "SW": a.directions["SW"],
                  "NE": b.directions["NE"], "SE": b.directions["SE"]}
    return Tangle2(crossings, corners, directions,
                   a.free_loops + b.free_loops + loops), find


def summand_closure(a: Tangle2, b: Tangle2, closure: str = "numerator"):
    """Close ``a + b`` while tracking where ``b`` ends up.

    Returns ``(diagram, region, corners)`` where ``region`` holds the indices
    of ``b``'s crossings inside the diagram and ``corners`` maps each corner of
    ``b`` to the bounding arc label it received, ready to feed to
    :func:`mutate`.
    """
    offset = (max(a.arcs) if a.arcs else 0) + 1
    b_shift = b.relabelled(offset)
    s, sum_find = _tangle_sum_tracked(a, b_shift)
    pairs = ((("NW", "NE"), ("SW", "SE")) if closure == "numerator"
             else (("NW", "SW"), ("NE", "SE")))
    diagram, close_find = _close(s, pairs)
    region = tuple(range(len(a.crossings), len(a.crossings) + len(b.crossings)))
    corners = {c: close_find(sum_find(b_shift.corners[c])) for c in CORNERS}
    return diagram, region, corners


# ---------------------------------------------------------------------------
# fractions and the closure identities


@dataclass(frozen=True)
class TangleFraction:
    """The pair (Conway polynomial of N(A), Conway polynomial of D(A))."""

    numerator: LaurentPoly
    denominator: LaurentPoly

    def __add__(self, other: "TangleFraction") -> "TangleFraction":
        return TangleFraction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __eq__(self, other):
        if not isinstance(other, TangleFraction):
            return NotImplemented
        return (self.numerator * other.denominator
                == other.numerator * self.denominator)


def conway_fraction(tangle: Tangle2) -> TangleFraction:
    return TangleFraction(conway_poly(numerator(tangle)),
                          conway_poly(denominator(tangle)))


def fraction_additivity_check(a: Tangle2, b: Tangle2) -> bool:
    """F(A+B) = F(A) + F(B) as uncancelled fractions (cross-multiplied)."""
    return conway_fraction(tangle_sum(a, b)) == conway_fraction(a) + conway_fraction(b)


def theorem_332_check(a: Tangle2, b: Tangle2) -> bool:
    """The closure identities for a sum of alternating tangles:

        (A+B)^D = A^D B^D
        (1-(x+y)^2)(A+B)^N = (A^N B^D + A^D B^N) - (x+y)(A^N B^N + A^D B^D)

    where X^N, X^D are skein polynomials (x, y) of the two closures.
    """
    if not a.is_alternating or not b.is_alternating:
        raise TangleError("orientation clash: closure identities need alternating tangles")
    an, ad = homflypt(numerator(a)), homflypt(denominator(a))
    bn, bd = homflypt(numerator(b)), homflypt(denominator(b))
    s = tangle_sum(a, b)
    sn, sd = homflypt(numerator(s)), homflypt(denominator(s))
    x = LaurentPoly.var("x", variables=("x", "y"))
    y = LaurentPoly.var("y", variables=("x", "y"))
    w = x + y
    if sd != ad * bd:
        return False
    return (1 - w * w) * sn == (an * bd + ad * bn) - w * (an * bn + ad * bd)


# ---------------------------------------------------------------------------
# mutation


def mutate(diagram: LinkDiagram, region, corners: dict, axis: str) -> LinkDiagram:
    """Mutate: rotate a 4-ended sub-fragment 180 degrees about the given axis.

    ``region`` is the set of crossing indices inside the fragment; ``corners``
    names the four boundary arcs by the corner where they cross the boundary.
    Axis "z" rotates in the projection plane (crossings unchanged); "x" and
    "y" flip the fragment over, exchanging the strand passes at each crossing
    while preserving crossing signs.  Fragment strands are reversed as needed
    so the surrounding orientations still match.
    """
    if axis not in AXIS_CORNER_SWAP:
        raise TangleError(f"unknown mutation axis {axis!r}")
    inside = set(region)
    if not inside <= set(range(len(diagram.crossings))):
        raise TangleError("region lists crossings outside the diagram")
    if set(corners) != set(CORNERS):
        raise TangleError("corners must name NW, NE, SW, SE")

    head_of = {}
    tail_of = {}
    for i, cr in enumerate(diagram.crossings):
        for arc in (cr.under_in, cr.over_in):
            head_of[arc] = i
        for arc in (cr.under_out, cr.over_out):
            tail_of[arc] = i
    boundary = {a for a in diagram.arcs
                if (head_of[a] in inside) != (tail_of[a] in inside)}
    if boundary != set(corners.values()) or len(set(corners.values())) != 4:
        raise TangleError("corner arcs must be exactly the four boundary arcs of the region")

    # 1. carve out the fragment as a tangle (boundary arcs keep their labels)
    directions = {}
    for c, arc in corners.items():
        directions[c] = "in" if head_of[arc] in inside else "out"
    frag = Tangle2(tuple(diagram.crossings[i] for i in sorted(inside)),
                   dict(corners), directions)

    # 2. rotate: permute corners; for x/y also swap the passes at each crossing
    swap = AXIS_CORNER_SWAP[axis]
    new_corners = {swap[c]: frag.corners[c] for c in CORNERS}
    new_dirs = {swap[c]: frag.directions[c] for c in CORNERS}
    crossings = frag.crossings
    if axis in ("x", "y"):
        crossings = tuple(
            Crossing(cr.over_in, cr.over_out, cr.under_in, cr.under_out, cr.sign)
            for cr in crossings
        )
    frag = Tangle2(crossings, new_corners, new_dirs, 0)

    # 3. relabel fragment arcs to fresh labels to avoid collisions
    offset = max(diagram.arcs) + 1
    frag = frag.relabelled(offset)

    # 4. reorient fragment strands so each corner matches the outside direction
    outside_dir = {c: ("in" if head_of[corners[c]] in inside else "out") for c in CORNERS}
    target = outside_dir  # outside still expects flow in/out exactly as before
    strands = frag.open_strands()
    adjusted = None
    for k in range(len(strands) + 1):
        for combo in itertools.combinations(strands, k):
            t = frag
            for s in combo:
                t = t.reverse_strand(s[0])
            if all(t.directions[c] == target[c] for c in CORNERS):
                adjusted = t
                break
        if adjusted is not None:
            break
    if adjusted is None:
        raise TangleError("orientation clash: mutation cannot be oriented consistently")
    frag = adjusted

    # 5. splice fragment back: fragment corner arc takes the outside label
    rename = {frag.corners[c]: corners[c] for c in CORNERS}
    spliced = tuple(
        Crossing(rename.get(cr.under_in, cr.under_in), rename.get(cr.under_out, cr.under_out),
                 rename.get(cr.over_in, cr.over_in), rename.get(cr.over_out, cr.over_out),
                 cr.sign)
        for cr in frag.crossings
    )
    outside = tuple(cr for i, cr in enumerate(diagram.crossings) if i not in inside)
    return LinkDiagram(outside + spliced, diagram.free_loops)


# ---------------------------------------------------------------------------
# parametrized families


def pretzel(*columns: int) -> LinkDiagram:
    """Pretzel link: numerator closure of side-by-side vertical twist columns."""
    if not columns:
        raise TangleError("a pretzel needs at least one column")
    total = vertical_tangle(columns[0])
    for p in columns[1:]:
        total = tangle_sum(total, vertical_tangle(p))
    return numerator(total)


def twist_knot(n: int) -> LinkDiagram:
    """Twist knot with |n| twist crossings plus a clasp (n + 2 crossings).

    Calibrated so that twist_knot(2) is the figure-eight knot and
    twist_knot(-2) the right-handed trefoil.
    """
    if n == 0:
        raise TangleError("twist_knot needs a nonzero twist count")
    return numerator(tangle_sum(integer_tangle(n), vertical_tangle(2, sign=-1))).mirror()


# Two-slot twist family with the "same sum, same polynomial" property.
#
# The base diagram is the closure of a two-tangle sum (derived and validated
# by scripts/derive_kanenobu_template.py); the two frozen arc pairs are
# antiparallel band sites.  Replacing either site by the crossingless
# turn-back yields one and the same 2-component link no matter how many
# twists sit in the other site, which forces the skein module value of
# kanenobu(p, q) to depend on p + q only.
_KANENOBU_BASE_PD = ("PD[X(25,10,2,6),X(6,2,7,3),X(3,7,4,8),X(4,10,13,15),"
                     "X(8,15,20,16),X(17,21,16,20),X(21,17,22,18),X(13,25,18,22)]")
_KANENOBU_SITES = ((15, 8), (13, 25))


def kanenobu(m: int | None, n: int | None = 0) -> LinkDiagram:
    """Two-parameter twist-family diagram K(m, n).

    ``m`` and ``n`` count half twists inserted at the two band sites
    (negative for the opposite handedness).  Passing ``None`` fills that slot
    with the crossingless turn-back instead, which yields one and the same
    2-component link no matter what sits in the other slot.
    """
    from skeinlab.diagram import parse_pd
    from skeinlab.skein import insert_antiparallel_twists, splice_infinity

    diagram = parse_pd(_KANENOBU_BASE_PD)
    for count, site in ((m, _KANENOBU_SITES[0]), (n, _KANENOBU_SITES[1])):
        if count:
            diagram = insert_antiparallel_twists(
                diagram, *site, abs(count), sign=(1 if count > 0 else -1))
    if m is None:
        diagram = splice_infinity(diagram, *_KANENOBU_SITES[0])
    if n is None:
        diagram = splice_infinity(diagram, *_KANENOBU_SITES[1])
    return diagram


# ---------------------------------------------------------------------------
# satellite construction: Whitehead doubles


def _doubled_crossings(companion: LinkDiagram):
    """Blackboard-framed 2-cable of a knot diagram.

    Each arc ``a`` is replaced by a parallel copy ``2a`` (same direction) and
    a reversed copy ``2a + 1``; each crossing becomes a planar 2x2 block of
    four crossings whose signs follow the copy orientations.  Returns the new
    crossing list, both copy maps, and the next unused arc label.
    """
    arcs = sorted(companion.arcs)
    plus = {a: 2 * a for a in arcs}
    minus = {a: 2 * a + 1 for a in arcs}
    fresh = 2 * max(arcs) + 2
    crossings = []
    for cr in companion.crossings:
        s = cr.sign
        oi, oo, ui, uo = cr.over_in, cr.over_out, cr.under_in, cr.under_out
        f1, f2, f3, f4 = fresh, fresh + 1, fresh + 2, fresh + 3
        fresh += 4
        # each block entry: (over pass, under pass, sign); the visit order of
        # the four strand copies through the block depends on the sign
        if s > 0:
            block = [((plus[oi], f1), (f3, plus[uo]), s),
                     ((f1, plus[oo]), (minus[uo], f4), -s),
                     ((minus[oo], f2), (f4, minus[ui]), s),
                     ((f2, minus[oi]), (plus[ui], f3), -s)]
        else:
            block = [((plus[oi], f1), (f4, minus[ui]), -s),
                     ((f1, plus[oo]), (plus[ui], f3), s),
                     ((minus[oo], f2), (f3, plus[uo]), -s),
                     ((f2, minus[oi]), (minus[uo], f4), s)]
        for (ov, un, sg) in block:
            crossings.append(Crossing(un[0], un[1], ov[0], ov[1], sg))
    return crossings, plus, minus, fresh


def whitehead_double_with_clasp(companion: LinkDiagram, clasp_sign: int = 1,
                                framing_twists: int | None = None,
                                twist_sign: int | None = None):
    """Whitehead double plus the clasp region data for mutation.

    Returns ``(diagram, region, corners)`` where ``region`` indexes the two
    clasp crossings and ``corners`` maps corner positions to the four arcs at
    the clasp boundary.  With the default ``framing_twists=None`` the band is
    given the untwisted (0-framed) satellite framing, which trivializes the
    Conway polynomial of the double.
    """
    from skeinlab.skein import insert_antiparallel_twists

    if companion.n_components != 1 or companion.free_loops:
        raise TangleError("the companion must be a knot diagram")
    if not companion.crossings:
        raise TangleError("the companion needs at least one crossing")
    if clasp_sign not in (1, -1):
        raise TangleError("clasp_sign must be +-1")
    crossings, plus, minus, fresh = _doubled_crossings(companion)
    a0 = min(companion.arcs)
    p, m = plus[a0], minus[a0]
    x, y, n1, n2 = fresh, fresh + 1, fresh + 2, fresh + 3

    def replace_head(label, new):
        for i, cr in enumerate(crossings):
            if cr.under_in == label:
                crossings[i] = Crossing(new, cr.under_out, cr.over_in,
                                        cr.over_out, cr.sign)
                return
            if cr.over_in == label:
                crossings[i] = Crossing(cr.under_in, cr.under_out, new,
                                        cr.over_out, cr.sign)
                return
        raise TangleError(f"arc {label} has no head crossing")

    replace_head(p, n1)
    replace_head(m, n2)
    # the clasp hooks two facing turn-backs: p -> x -> n2 and m -> y -> n1,
    # where (p, x) crosses (y, n1) and (x, n2) crosses (m, y)
    if clasp_sign > 0:
        c1 = Crossing(y, n1, p, x, 1)
        c2 = Crossing(x, n2, m, y, 1)
    else:
        c1 = Crossing(p, x, y, n1, -1)
        c2 = Crossing(m, y, x, n2, -1)
    region = (len(crossings), len(crossings) + 1)
    crossings += [c1, c2]
    corners = {"SW": p, "NW": n2, "NE": m, "SE": n1}
    diagram = LinkDiagram(tuple(crossings))

    w = companion.writhe
    if framing_twists is None:
        framing_twists = abs(w)
        twist_sign = 1 if w > 0 else -1
    if twist_sign is None:
        twist_sign = 1
    if framing_twists:
        b = sorted(companion.arcs)[1] if len(companion.arcs) > 1 else None
        if b is None:
            raise TangleError("the companion needs at least two arcs for framing twists")
        diagram = insert_antiparallel_twists(diagram, plus[b], minus[b],
                                             framing_twists, twist_sign)
    return diagram, region, corners


def whitehead_double(companion: LinkDiagram, clasp_sign: int = 1,
                     framing_twists: int | None = None,
                     twist_sign: int | None = None) -> LinkDiagram:
    """Whitehead double of a knot diagram (untwisted by default)."""
    return whitehead_double_with_clasp(companion, clasp_sign,
                                       framing_twists, twist_sign)[0]
