"""Oriented link diagrams as PD codes, with the moves needed by skein recursion.

A crossing ``X(a,b,c,d)`` lists the four arc labels counterclockwise starting
at the incoming under-strand; the under-strand runs a -> c and the crossing is
positive exactly when the over-strand runs d -> b.  Internally each crossing
stores its two directed passes plus the sign, so every operation (switching,
smoothing, mirroring, reversing components) is a small rewrite of that data.

Free (crossingless) loops are tracked by a counter; they carry no arc labels.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from functools import cached_property


class DiagramError(ValueError):
    pass


class PDParseError(DiagramError):
    pass


@dataclass(frozen=True)
class Crossing:
    under_in: int
    under_out: int
    over_in: int
    over_out: int
    sign: int

    def __post_init__(self):
        if self.sign not in (-1, 1):
            raise DiagramError(f"crossing sign must be +-1, got {self.sign}")

    @property
    def slots(self) -> tuple[int, int, int, int]:
        """Arc labels in counterclockwise order (a, b, c, d) starting at under-in."""
        if self.sign > 0:
            return (self.under_in, self.over_out, self.under_out, self.over_in)
        return (self.under_in, self.over_in, self.under_out, self.over_out)

    def switched(self) -> "Crossing":
        """Exchange over and under strands (a crossing change)."""
        return Crossing(self.over_in, self.over_out, self.under_in, self.under_out, -self.sign)

    def passes(self):
        return ((self.under_in, self.under_out), (self.over_in, self.over_out))

    def arcs(self):
        return {self.under_in, self.under_out, self.over_in, self.over_out}


def _reverse_passes(crossings, flip_arcs):
    """Reverse every pass whose arcs lie in flip_arcs; fix signs accordingly."""
    out = []
    for cr in crossings:
        u_flip = cr.under_in in flip_arcs or cr.under_out in flip_arcs
        o_flip = cr.over_in in flip_arcs or cr.over_out in flip_arcs
        if u_flip and not (cr.under_in in flip_arcs and cr.under_out in flip_arcs):
            raise DiagramError("cannot reverse half of a strand pass")
        if o_flip and not (cr.over_in in flip_arcs and cr.over_out in flip_arcs):
            raise DiagramError("cannot reverse half of a strand pass")
        ui, uo = (cr.under_out, cr.under_in) if u_flip else (cr.under_in, cr.under_out)
        oi, oo = (cr.over_out, cr.over_in) if o_flip else (cr.over_in, cr.over_out)
        sign = cr.sign if u_flip == o_flip else -cr.sign
        out.append(Crossing(ui, uo, oi, oo, sign))
    return out


def _merge_dangling(crossings, joins):
    """Glue dangling arc ends after crossings were deleted.

    ``joins`` is a list of pairs (u, v): the strand arriving on arc u
    continues as arc v.  Returns (relabelled crossings, closed loop count).
    """
    parent: dict[int, int] = {}

    def find(x):
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    loops = 0
    for u, v in joins:
        ru, rv = find(u), find(v)
        if ru == rv:
            loops += 1
        else:
            parent[max(ru, rv)] = min(ru, rv)
    relabel = {}
    for u, v in joins:
        relabel[u] = find(u)
        relabel[v] = find(v)
    new = [
        Crossing(
            relabel.get(cr.under_in, cr.under_in),
            relabel.get(cr.under_out, cr.under_out),
            relabel.get(cr.over_in, cr.over_in),
            relabel.get(cr.over_out, cr.over_out),
            cr.sign,
        )
        for cr in crossings
    ]
    return new, loops


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...]
    free_loops: int = 0
    base_points: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        if self.free_loops < 0:
            raise DiagramError("free loop count cannot be negative")
        heads: dict[int, int] = {}
        tails: dict[int, int] = {}
        for i, cr in enumerate(self.crossings):
            for arc, book in ((cr.under_in, heads), (cr.over_in, heads),
                              (cr.under_out, tails), (cr.over_out, tails)):
                if arc in book:
                    raise DiagramError(f"arc {arc} has two {'heads' if book is heads else 'tails'}")
                book[arc] = i
        if set(heads) != set(tails):
            odd = set(heads) ^ set(tails)
            raise DiagramError(f"arcs {sorted(odd)} do not close up into strands")
        if self.base_points is not None:
            object.__setattr__(self, "base_points", tuple(self.base_points))
            arcs = set(heads)
            for bp in self.base_points:
                if bp not in arcs:
                    raise DiagramError(f"base point {bp} is not an arc of the diagram")

    # -- basic structure ---------------------------------------------------

    @cached_property
    def arcs(self) -> tuple[int, ...]:
        out = set()
        for cr in self.crossings:
            out |= cr.arcs()
        return tuple(sorted(out))

    @cached_property
    def _head_at(self) -> dict[int, tuple[int, str]]:
        """arc -> (crossing index, 'under'|'over') where the arc terminates."""
        out = {}
        for i, cr in enumerate(self.crossings):
            out[cr.under_in] = (i, "under")
            out[cr.over_in] = (i, "over")
        return out

    def successor(self, arc: int) -> int:
        i, kind = self._head_at[arc]
        cr = self.crossings[i]
        return cr.under_out if kind == "under" else cr.over_out

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Cycles of arcs under the strand-successor map, ordered by least arc."""
        seen = set()
        comps = []
        for start in self.arcs:
            if start in seen:
                continue
            cycle = []
            a = start
            while a not in seen:
                seen.add(a)
                cycle.append(a)
                a = self.successor(a)
            comps.append(tuple(cycle))
        comps.sort(key=lambda cyc: min(cyc))
        return tuple(comps)

    @cached_property
    def component_of(self) -> dict[int, int]:
        return {a: i for i, comp in enumerate(self.components) for a in comp}

    @property
    def n_components(self) -> int:
        return len(self.components) + self.free_loops

    @property
    def writhe(self) -> int:
        return sum(cr.sign for cr in self.crossings)

    def is_self_crossing(self, i: int) -> bool:
        cr = self.crossings[i]
        return self.component_of[cr.under_in] == self.component_of[cr.over_in]

    def linking_number(self, comp_a, comp_b) -> "__import__('fractions').Fraction":
        """Linking number of two groups of components (by component index)."""
        from fractions import Fraction

        set_a = {comp_a} if isinstance(comp_a, int) else set(comp_a)
        set_b = {comp_b} if isinstance(comp_b, int) else set(comp_b)
        if set_a & set_b:
            raise DiagramError("linking number needs disjoint component sets")
        total = 0
        for cr in self.crossings:
            cu = self.component_of[cr.under_in]
            co = self.component_of[cr.over_in]
            if (cu in set_a and co in set_b) or (cu in set_b and co in set_a):
                total += cr.sign
        return Fraction(total, 2)

    def total_linking(self, subset) -> "__import__('fractions').Fraction":
        """lk(S, L-S) for a subset S of component indices (free loops link nothing)."""
        rest = set(range(len(self.components))) - set(subset)
        if not subset or not rest:
            from fractions import Fraction

            return Fraction(0)
        return self.linking_number(set(subset), rest)

    # -- traversal, good and bad crossings ---------------------------------

    def _start_arcs(self, base_points=None, component_order=None):
        comps = self.components
        order = list(component_order) if component_order is not None else list(range(len(comps)))
        if sorted(order) != list(range(len(comps))):
            raise DiagramError(f"component order {order} is not a permutation")
        base_points = base_points if base_points is not None else self.base_points
        starts = {}
        if base_points:
            for bp in base_points:
                ci = self.component_of.get(bp)
                if ci is None:
                    raise DiagramError(f"base point {bp} is not an arc")
                if ci in starts:
                    raise DiagramError(f"two base points on component {ci}")
                starts[ci] = bp
        return [(ci, starts.get(ci, min(comps[ci]))) for ci in order]

    def traversal(self, base_points=None, component_order=None):
        """Yield (arc, crossing index, 'under'|'over') along the full traversal."""
        for ci, start in self._start_arcs(base_points, component_order):
            a = start
            while True:
                i, kind = self._head_at[a]
                yield a, i, kind
                a = self.crossings[i].under_out if kind == "under" else self.crossings[i].over_out
                if a == start:
                    break

    def bad_crossings(self, base_points=None, component_order=None) -> tuple[int, ...]:
        """Crossings first met on the under-strand, in traversal order."""
        first = {}
        order = []
        for _, i, kind in self.traversal(base_points, component_order):
            if i not in first:
                first[i] = kind
                order.append(i)
        return tuple(i for i in order if first[i] == "under")

    def is_descending(self, base_points=None, component_order=None) -> bool:
        return not self.bad_crossings(base_points, component_order)

    def first_bad_crossing(self, base_points=None, component_order=None) -> int | None:
        bad = self.bad_crossings(base_points, component_order)
        return bad[0] if bad else None

    # -- moves -------------------------------------------------------------

    def switch_crossing(self, i: int) -> "LinkDiagram":
        crossings = list(self.crossings)
        crossings[i] = crossings[i].switched()
        return LinkDiagram(tuple(crossings), self.free_loops, self.base_points)

    def mirror(self) -> "LinkDiagram":
        return LinkDiagram(tuple(cr.switched() for cr in self.crossings), self.free_loops, self.base_points)

    def reverse(self, components=None) -> "LinkDiagram":
        """Reverse the orientation of the given components (default: all)."""
        comps = set(range(len(self.components))) if components is None else set(components)
        flip = {a for ci in comps for a in self.components[ci]}
        return LinkDiagram(tuple(_reverse_passes(self.crossings, flip)), self.free_loops)

    def smooth_oriented(self, i: int) -> "LinkDiagram":
        cr = self.crossings[i]
        rest = [c for j, c in enumerate(self.crossings) if j != i]
        joins = [(cr.under_in, cr.over_out), (cr.over_in, cr.under_out)]
        new, loops = _merge_dangling(rest, joins)
        return LinkDiagram(tuple(new), self.free_loops + loops)

    def smooth_disoriented(self, i: int) -> "LinkDiagram":
        """The smoothing incompatible with orientation, reoriented on one side.

        For a self-crossing the strand segment between the two passes is
        reversed; for a mixed crossing the whole other component is reversed.
        Returns an oriented diagram inducing the correct unoriented smoothing.
        """
        cr = self.crossings[i]
        rest = [c for j, c in enumerate(self.crossings) if j != i]
        if cr.under_in == cr.under_out:  # under-pass is a bare curl loop
            new, loops = _merge_dangling(rest, [(cr.over_in, cr.under_in), (cr.under_in, cr.over_out)])
            return LinkDiagram(tuple(new), self.free_loops + loops)
        if cr.over_in == cr.over_out:  # over-pass is a bare curl loop
            new, loops = _merge_dangling(rest, [(cr.under_in, cr.over_in), (cr.over_in, cr.under_out)])
            return LinkDiagram(tuple(new), self.free_loops + loops)
        # walk forward from the under-out arc until the strand re-enters cr
        path = []
        a = cr.under_out
        while True:
            path.append(a)
            if a == cr.over_in or a == cr.under_in:
                break
            a = self.successor(a)
        if a == cr.over_in:
            flip = set(path)  # self-crossing: reverse the segment between passes
        else:
            flip = set(self.components[self.component_of[cr.over_in]])  # mixed
        flipped = _reverse_passes(rest, flip)
        if a == cr.over_in:
            joins = [(cr.under_in, cr.over_in), (cr.under_out, cr.over_out)]
        else:
            joins = [(cr.under_in, cr.over_in), (cr.over_out, cr.under_out)]
        new, loops = _merge_dangling(flipped, joins)
        return LinkDiagram(tuple(new), self.free_loops + loops)

    def disoriented_reversed_side(self, i: int) -> set[int]:
        """The arcs whose orientation smooth_disoriented reverses (before merging)."""
        cr = self.crossings[i]
        if cr.under_in == cr.under_out:
            return {cr.under_in}
        if cr.over_in == cr.over_out:
            return {cr.over_in}
        path = []
        a = cr.under_out
        while True:
            path.append(a)
            if a == cr.over_in or a == cr.under_in:
                break
            a = self.successor(a)
        if a == cr.over_in:
            return set(path)
        return set(self.components[self.component_of[cr.over_in]])

    # -- sums, sublinks ----------------------------------------------------

    def relabelled(self, offset: int) -> "LinkDiagram":
        m = {a: a + offset for a in self.arcs}
        return LinkDiagram(
            tuple(
                Crossing(m[c.under_in], m[c.under_out], m[c.over_in], m[c.over_out], c.sign)
                for c in self.crossings
            ),
            self.free_loops,
            tuple(m[b] for b in self.base_points) if self.base_points else None,
        )

    def disjoint_union(self, other: "LinkDiagram") -> "LinkDiagram":
        offset = max(self.arcs, default=0)
        other = other.relabelled(offset)
        return LinkDiagram(self.crossings + other.crossings, self.free_loops + other.free_loops)

    def connected_sum(self, other: "LinkDiagram", arc_self: int | None = None,
                      arc_other: int | None = None) -> "LinkDiagram":
        if not self.crossings and self.free_loops == 1:
            return other
        if not other.crossings and other.free_loops == 1:
            return self
        if not self.crossings or not other.crossings:
            raise DiagramError("connected sum needs an arc on each summand")
        arc_self = arc_self if arc_self is not None else self.arcs[0]
        offset = max(self.arcs)
        other = other.relabelled(offset)
        arc_other = (arc_other + offset) if arc_other is not None else other.arcs[0]
        crossings = []
        for cr in self.crossings + other.crossings:
            sub = {arc_self: arc_other, arc_other: arc_self}
            crossings.append(
                Crossing(
                    sub.get(cr.under_in, cr.under_in),
                    cr.under_out,
                    sub.get(cr.over_in, cr.over_in),
                    cr.over_out,
                    cr.sign,
                )
            )
        return LinkDiagram(tuple(crossings), self.free_loops + other.free_loops)

    def sublink(self, keep) -> "LinkDiagram":
        """Delete all components not in ``keep`` (indices into self.components)."""
        keep = set(keep)
        if not keep <= set(range(len(self.components))):
            raise DiagramError(f"bad component indices {keep}")
        kept_arcs = {a for ci in keep for a in self.components[ci]}
        crossings = []
        joins = []
        lost = set(keep)
        for cr in self.crossings:
            u_in = cr.under_in in kept_arcs
            o_in = cr.over_in in kept_arcs
            if u_in and o_in:
                crossings.append(cr)
            elif u_in:
                joins.append((cr.under_in, cr.under_out))
            elif o_in:
                joins.append((cr.over_in, cr.over_out))
        new, loops = _merge_dangling(crossings, joins)
        for cr in new:
            lost.discard(self.component_of.get(cr.under_in, -1))
        return LinkDiagram(tuple(new), loops)

    # -- canonical form ----------------------------------------------------

    def canonical_key(self, base_points=None, component_order=None):
        """A relabelling-invariant key (given traversal start data)."""
        relabel = {}
        for a, _, _ in self.traversal(base_points, component_order):
            if a not in relabel:
                relabel[a] = len(relabel) + 1
        crossings = sorted(
            (relabel[c.under_in], relabel[c.under_out], relabel[c.over_in], relabel[c.over_out], c.sign)
            for c in self.crossings
        )
        return (tuple(crossings), self.free_loops)

    def with_base_points(self, base_points) -> "LinkDiagram":
        return replace(self, base_points=tuple(base_points) if base_points is not None else None)

    # -- planar faces and rotation numbers ---------------------------------

    @cached_property
    def _darts(self):
        """Map arc -> (tail dart, head dart); darts are (crossing, slot)."""
        tail, head = {}, {}
        for i, cr in enumerate(self.crossings):
            a, b, c, d = cr.slots
            head[a] = (i, 0)
            tail[c] = (i, 2)
            if cr.sign > 0:
                tail[b] = (i, 1)
                head[d] = (i, 3)
            else:
                head[b] = (i, 1)
                tail[d] = (i, 3)
        return tail, head

    @cached_property
    def faces(self) -> tuple[tuple, ...]:
        """Faces as orbits of corners; corner (i, s) sits between slots s and s+1."""
        if not self.crossings:
            return ()
        tail, head = self._darts
        other_end = {}
        for a in self.arcs:
            other_end[tail[a]] = head[a]
            other_end[head[a]] = tail[a]
        # From corner (i, s): travel along the arc in slot s; at the far end
        # (i', s') the same face continues at corner (i', s'-1).
        corners = [(i, s) for i in range(len(self.crossings)) for s in range(4)]
        slot_arc = {
            (i, s): self.crossings[i].slots[s] for i in range(len(self.crossings)) for s in range(4)
        }

        def step(corner):
            i, s = corner
            arc = slot_arc[(i, s)]
            here = (i, s)
            far = other_end[here]
            return (far[0], (far[1] - 1) % 4)

        seen = set()
        faces = []
        for c in corners:
            if c in seen:
                continue
            orbit = []
            cur = c
            while cur not in seen:
                seen.add(cur)
                orbit.append(cur)
                cur = step(cur)
            faces.append(tuple(orbit))
        return tuple(faces)

    @cached_property
    def _face_of_corner(self):
        return {c: i for i, f in enumerate(self.faces) for c in f}

    def _arc_sides(self, arc: int):
        """(left face, right face) of a directed arc, via its head corners."""
        _, head = self._darts
        i, s = head[arc]
        left = self._face_of_corner[(i, (s - 1) % 4)]
        right = self._face_of_corner[(i, s)]
        return left, right

    @cached_property
    def outer_face(self) -> int:
        """Unbounded face convention: the face to the right of the lowest arc."""
        if not self.crossings:
            raise DiagramError("a crossingless diagram has no face data")
        return self._arc_sides(min(self.arcs))[1]

    def face_windings(self) -> dict[int, int]:
        """Winding number of each face, zero on the chosen unbounded face."""
        winding = {self.outer_face: 0}
        queue = [self.outer_face]
        adj: dict[int, list] = {}
        for a in self.arcs:
            left, right = self._arc_sides(a)
            adj.setdefault(left, []).append((right, -1))
            adj.setdefault(right, []).append((left, +1))
        while queue:
            f = queue.pop()
            for g, delta in adj.get(f, ()):
                w = winding[f] + delta
                if g in winding:
                    if winding[g] != w:
                        raise DiagramError("inconsistent face windings: diagram is not planar")
                else:
                    winding[g] = w
                    queue.append(g)
        if len(winding) != len(self.faces):
            raise DiagramError("disconnected face graph")
        return winding

    def seifert_circles(self) -> tuple[tuple[int, ...], ...]:
        """Orbits of arcs after orientation-preserving smoothing of every crossing."""
        succ = {}
        for cr in self.crossings:
            succ[cr.under_in] = cr.over_out
            succ[cr.over_in] = cr.under_out
        seen = set()
        circles = []
        for start in self.arcs:
            if start in seen:
                continue
            cyc = []
            a = start
            while a not in seen:
                seen.add(a)
                cyc.append(a)
                a = succ[a]
            circles.append(tuple(cyc))
        return tuple(sorted(circles, key=min))

    @cached_property
    def connected_pieces(self) -> tuple["LinkDiagram", ...]:
        """Split diagram pieces (crossings linked through shared arcs)."""
        if not self.crossings:
            return ()
        parent = list(range(len(self.crossings)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        at = {}
        for i, cr in enumerate(self.crossings):
            for a in cr.arcs():
                if a in at:
                    ra, rb = find(at[a]), find(i)
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)
                else:
                    at[a] = i
        groups: dict[int, list] = {}
        for i in range(len(self.crossings)):
            groups.setdefault(find(i), []).append(i)
        return tuple(
            LinkDiagram(tuple(self.crossings[i] for i in idxs))
            for _, idxs in sorted(groups.items())
        )

    def whitney_degree(self, free_loop_rotations: tuple[int, ...] = ()) -> int:
        """Sum of rotation numbers of the Seifert circles of the diagram.

        Crossingless loops carry no rotation data in a PD code, so their
        rotations (+-1 each) must be supplied explicitly.  Split pieces are
        treated as lying side by side, each with its own unbounded face.
        """
        if len(free_loop_rotations) != self.free_loops:
            raise DiagramError(
                f"need rotations for {self.free_loops} crossingless loops, got {len(free_loop_rotations)}"
            )
        if any(r not in (-1, 1) for r in free_loop_rotations):
            raise DiagramError("loop rotations must be +-1")
        total = sum(free_loop_rotations)
        if not self.crossings:
            return total
        pieces = self.connected_pieces
        if len(pieces) > 1:
            return total + sum(p.whitney_degree() for p in pieces)
        # Merge faces across each smoothed crossing: the two corners lying
        # between the two parallel strands of the smoothing become one face.
        parent = list(range(len(self.faces)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        fc = self._face_of_corner
        for i, cr in enumerate(self.crossings):
            pair = ((i, 1), (i, 3)) if cr.sign > 0 else ((i, 0), (i, 2))
            a, b = find(fc[pair[0]]), find(fc[pair[1]])
            if a != b:
                parent[max(a, b)] = min(a, b)

        circles = self.seifert_circles()
        sides = {}
        for ci, circle in enumerate(circles):
            lefts = {find(self._arc_sides(a)[0]) for a in circle}
            rights = {find(self._arc_sides(a)[1]) for a in circle}
            if len(lefts) != 1 or len(rights) != 1:
                raise DiagramError("inconsistent smoothed faces: diagram is not planar")
            sides[ci] = (lefts.pop(), rights.pop())
        # The smoothed faces and circles form a tree; root it at the outer face.
        root = find(self.outer_face)
        children = {}
        for ci, (l, r) in sides.items():
            children.setdefault(l, []).append((ci, r))
            children.setdefault(r, []).append((ci, l))
        depth = {root: 0}
        stack = [root]
        orient = {}
        while stack:
            f = stack.pop()
            for ci, g in children.get(f, ()):
                if g not in depth:
                    depth[g] = depth[f] + 1
                    stack.append(g)
                    orient[ci] = g  # g is the bounded (child) side of circle ci
        for ci, (l, r) in sides.items():
            total += 1 if orient.get(ci) == l else -1
        return total

    # -- serialization -----------------------------------------------------

    def to_pd_text(self) -> str:
        xs = ",".join(f"X({a},{b},{c},{d})" for a, b, c, d in (cr.slots for cr in self.crossings))
        base = f"PD[{xs}] loops={self.free_loops}"
        if self.base_points:
            base += " basepoints=[" + ",".join(str(b) for b in self.base_points) + "]"
        return base

    def __repr__(self):
        return f"LinkDiagram({self.to_pd_text()!r})"


_PD_RE = re.compile(r"^PD\[(?P<xs>[^\]]*)\]\s*(?:loops=(?P<loops>\d+))?\s*(?:basepoints=\[(?P<bps>[\d,\s]*)\])?\s*$")
_X_RE = re.compile(r"^X(?P<sig>[+-]?)\((?P<args>\s*-?\d+(?:\s*,\s*-?\d+){3}\s*)\)$")


def parse_pd(text: str) -> LinkDiagram:
    """Parse ``PD[X(1,4,2,5),...] loops=N basepoints=[...]``.

    Over-strand directions are deduced so every arc has exactly one head and
    one tail; ambiguities are resolved deterministically (preferring the
    positive reading at the lowest ambiguous crossing).  Optional signs
    ``X+``/``X-`` are cross-checked against the deduced orientation.
    """
    m = _PD_RE.match(text.strip())
    if not m:
        raise PDParseError(f"malformed PD text: {text!r}")
    xs_text = m.group("xs").strip()
    quads = []
    if xs_text:
        depth = 0
        chunk = ""
        parts = []
        for ch in xs_text:
            if ch == "," and depth == 0:
                parts.append(chunk)
                chunk = ""
                continue
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            chunk += ch
        parts.append(chunk)
        for part in parts:
            xm = _X_RE.match(part.strip())
            if not xm:
                raise PDParseError(f"malformed crossing: {part.strip()!r}")
            a, b, c, d = (int(t) for t in xm.group("args").split(","))
            declared = {"+": 1, "-": -1, "": None}[xm.group("sig")]
            quads.append(((a, b, c, d), declared))
    loops = int(m.group("loops") or 0)
    bps = None
    if m.group("bps") is not None:
        bps = tuple(int(t) for t in m.group("bps").split(",") if t.strip())

    # occurrence bookkeeping: each arc needs exactly one head and one tail
    occurrences: dict[int, int] = {}
    for (a, b, c, d), _ in quads:
        for arc in (a, b, c, d):
            occurrences[arc] = occurrences.get(arc, 0) + 1
    bad = [arc for arc, n in occurrences.items() if n != 2]
    if bad:
        raise PDParseError(f"arcs {sorted(bad)} do not occur exactly twice")

    n = len(quads)
    choice: list[int | None] = [None] * n  # +1: over runs d->b, -1: over runs b->d

    def build(choices):
        crossings = []
        for ((a, b, c, d), declared), ch in zip(quads, choices):
            if ch > 0:
                cr = Crossing(a, c, d, b, 1)
            else:
                cr = Crossing(a, c, b, d, -1)
            crossings.append(cr)
        return crossings

    def consistent(choices):
        heads, tails = set(), set()
        for cr in build(choices):
            for arc, book in ((cr.under_in, heads), (cr.over_in, heads),
                              (cr.under_out, tails), (cr.over_out, tails)):
                if arc in book:
                    return False
                book.add(arc)
        return heads == tails

    def propagate():
        """Force over-directions using arcs whose head/tail is already pinned."""
        changed = True
        while changed:
            changed = False
            heads, tails = {}, {}
            for i, ((a, b, c, d), _) in enumerate(quads):
                heads.setdefault(a, set()).add(i)
                tails.setdefault(c, set()).add(i)
                ch = choice[i]
                if ch == 1:
                    heads.setdefault(d, set()).add(i)
                    tails.setdefault(b, set()).add(i)
                elif ch == -1:
                    heads.setdefault(b, set()).add(i)
                    tails.setdefault(d, set()).add(i)
            for i, ((a, b, c, d), _) in enumerate(quads):
                if choice[i] is not None:
                    continue
                b_head_elsewhere = any(j != i for j in heads.get(b, ()))
                b_tail_elsewhere = any(j != i for j in tails.get(b, ()))
                d_head_elsewhere = any(j != i for j in heads.get(d, ()))
                d_tail_elsewhere = any(j != i for j in tails.get(d, ()))
                # over direction d->b gives b a tail here and d a head here
                plus_ok = not (b_tail_elsewhere and b != d) and not (d_head_elsewhere and b != d)
                minus_ok = not (b_head_elsewhere and b != d) and not (d_tail_elsewhere and b != d)
                if plus_ok and not minus_ok:
                    choice[i] = 1
                    changed = True
                elif minus_ok and not plus_ok:
                    choice[i] = -1
                    changed = True
                elif not plus_ok and not minus_ok:
                    raise PDParseError(f"crossing {i} admits no consistent over-strand direction")

    propagate()
    undecided = [i for i, ch in enumerate(choice) if ch is None]

    def backtrack(k):
        if k == len(undecided):
            return consistent(choice)
        i = undecided[k]
        for ch in (1, -1):
            choice[i] = ch
            try:
                if backtrack(k + 1):
                    return True
            except PDParseError:
                pass
        choice[i] = None
        return False

    if undecided:
        if not backtrack(0):
            raise PDParseError("no consistent orientation of over-strands exists")
    crossings = build(choice)
    for cr, ((_, _, _, _), declared) in zip(crossings, quads):
        if declared is not None and declared != cr.sign:
            raise PDParseError(
                f"declared sign {declared:+d} contradicts deduced sign {cr.sign:+d} at {cr.slots}"
            )
    try:
        return LinkDiagram(tuple(crossings), loops, bps)
    except DiagramError as exc:
        raise PDParseError(str(exc)) from exc


def braid_closure(word, strands: int) -> LinkDiagram:
    """Close a braid word into a link diagram.

    ``word`` is a sequence of nonzero integers: ``+i`` crosses strands at
    positions i and i+1 with a positive crossing, ``-i`` with a negative one
    (1-based positions, all strands oriented the same way).  Strands that no
    letter touches close into free loops.
    """
    if strands < 1:
        raise DiagramError("a braid needs at least one strand")
    top = list(range(1, strands + 1))
    current = list(top)
    fresh = strands + 1
    crossings = []
    for letter in word:
        i = abs(letter)
        if not 1 <= i < strands:
            raise DiagramError(f"braid letter {letter} out of range for {strands} strands")
        left, right = current[i - 1], current[i]
        n_left, n_right = fresh, fresh + 1
        fresh += 2
        if letter > 0:
            # positive: the strand arriving on the right passes over
            crossings.append(Crossing(left, n_right, right, n_left, 1))
        else:
            crossings.append(Crossing(right, n_left, left, n_right, -1))
        current[i - 1], current[i] = n_left, n_right
    free = 0
    rename = {}
    for j in range(strands):
        if current[j] == top[j]:
            free += 1
        else:
            rename[current[j]] = top[j]
    closed = []
    for cr in crossings:
        closed.append(Crossing(rename.get(cr.under_in, cr.under_in),
                               rename.get(cr.under_out, cr.under_out),
                               rename.get(cr.over_in, cr.over_in),
                               rename.get(cr.over_out, cr.over_out), cr.sign))
    return LinkDiagram(tuple(closed), free)
