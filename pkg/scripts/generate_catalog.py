"""Regenerate the named-diagram corpus under src/skeinlab/data.

Every entry is built by the package's own constructors (or transcribed from
a standard presentation), validated for planar realizability (Euler
characteristic 2 per connected diagram), and written together with its
Reidemeister-move variants.  Variants are produced by explicit R1 kink / R2
poke surgeries or by braid-relation rewrites, and each one is checked to
carry the same skein polynomial as its main entry before being frozen.
"""

from __future__ import annotations

import itertools
import json
from pathlib import Path

from skeinlab.diagram import Crossing, LinkDiagram, braid_closure, parse_pd
from skeinlab.laurent import LaurentPoly
from skeinlab.skein import homflypt
from skeinlab.tangle import (integer_tangle, kanenobu, numerator, pretzel,
                             twist_knot, whitehead_double_with_clasp, mutate)

DATA = Path(__file__).resolve().parent.parent / "src" / "skeinlab" / "data"


def chi(diagram: LinkDiagram) -> int:
    return -len(diagram.crossings) + len(diagram.faces)


def is_planar(diagram: LinkDiagram) -> bool:
    return not diagram.crossings or chi(diagram) == 2


def r1_kink(diagram: LinkDiagram, arc: int, sign: int) -> LinkDiagram:
    """Add a Reidemeister-1 kink of the given sign on ``arc``."""
    fresh = max(diagram.arcs) + 1
    n1, n2 = fresh, fresh + 1

    def rehead(crossings, old, new):
        out = []
        done = False
        for cr in crossings:
            if not done and cr.under_in == old:
                cr, done = Crossing(new, cr.under_out, cr.over_in, cr.over_out, cr.sign), True
            elif not done and cr.over_in == old:
                cr, done = Crossing(cr.under_in, cr.under_out, new, cr.over_out, cr.sign), True
            out.append(cr)
        if not done:
            raise ValueError(f"arc {arc} has no head")
        return out

    base = rehead(list(diagram.crossings), arc, n2)
    wirings = [Crossing(arc, n1, n1, n2, sign), Crossing(n1, n2, arc, n1, sign)]
    target = homflypt(diagram)
    for kink in wirings:
        cand = LinkDiagram(tuple(base + [kink]), diagram.free_loops)
        if is_planar(cand) and cand.writhe == diagram.writhe + sign \
                and homflypt(cand) == target:
            return cand
    raise ValueError(f"no planar R1 kink on arc {arc} with sign {sign}")


def r2_poke(diagram: LinkDiagram) -> LinkDiagram:
    """Push one strand over a face-adjacent strand (Reidemeister 2)."""
    target = homflypt(diagram)
    fresh0 = max(diagram.arcs) + 1
    for face in diagram.faces:
        arcs = []
        for (i, s) in face:
            arcs.append(diagram.crossings[i].slots[s])
        for a, b in itertools.combinations(dict.fromkeys(arcs), 2):
            if a == b:
                continue
            n1, n2, n3, n4 = range(fresh0, fresh0 + 4)

            def rehead(crossings, old, new):
                out, done = [], False
                for cr in crossings:
                    if not done and cr.under_in == old:
                        cr, done = Crossing(new, cr.under_out, cr.over_in, cr.over_out, cr.sign), True
                    elif not done and cr.over_in == old:
                        cr, done = Crossing(cr.under_in, cr.under_out, new, cr.over_out, cr.sign), True
                    out.append(cr)
                return out if done else None

            base = rehead(list(diagram.crossings), a, n2)
            if base is None:
                continue
            base = rehead(base, b, n4)
            if base is None:
                continue
            # strand a: a -> n1 -> n2 ; strand b: b -> n3 -> n4; a passes over
            # b twice with cancelling signs; both traversal orders are tried.
            for s1 in (1, -1):
                for bo in ((b, n3), (n3, n4)):
                    other = (n3, n4) if bo == (b, n3) else (b, n3)
                    c1 = Crossing(bo[0], bo[1], a, n1, s1)
                    c2 = Crossing(other[0], other[1], n1, n2, -s1)
                    cand = LinkDiagram(tuple(base + [c1, c2]), diagram.free_loops)
                    if is_planar(cand) and cand.writhe == diagram.writhe \
                            and homflypt(cand) == target:
                        return cand
    raise ValueError("no planar R2 poke found")


def build_entries():
    trefoil_left = parse_pd("PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]")
    trefoil_right = trefoil_left.mirror()
    figure_eight = parse_pd("PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]")

    wh_double, wh_region, wh_corners = whitehead_double_with_clasp(
        trefoil_right.connected_sum(trefoil_left), clasp_sign=1)
    wh_mutant = mutate(wh_double, tuple(range(12)),
                       {"NW": 2, "NE": 53, "SW": 14, "SE": 15}, "y")

    entries = {}

    def add(name, diagram, provenance, variants=()):
        entries[name] = (diagram, provenance, list(variants))

    add("unknot", LinkDiagram((), 1), "constructed",
        [braid_closure([1], 2), braid_closure([1, 1, -1], 2)])
    add("unlink_2", LinkDiagram((), 2), "constructed",
        [braid_closure([1, -1], 2)])
    add("unlink_3", LinkDiagram((), 3), "constructed",
        [braid_closure([1, -1], 3)])

    hopf_plus = numerator(integer_tangle(2))
    add("hopf_plus", hopf_plus, "constructed",
        [braid_closure([1, 1], 2), r1_kink(hopf_plus, min(hopf_plus.arcs), -1)])
    add("hopf_minus", hopf_plus.mirror(), "constructed",
        [braid_closure([-1, -1], 2)])

    add("trefoil_right", trefoil_right, "transcribed",
        [braid_closure([1, 1, 1], 2),
         braid_closure([1, 2, 1, 2], 3),      # related by one braid-relation
         braid_closure([2, 1, 2, 2], 3),      # (R3) rewrite to the previous
         r1_kink(trefoil_right, 1, 1),
         r2_poke(trefoil_right)])
    add("trefoil_left", trefoil_left, "transcribed",
        [braid_closure([-1, -1, -1], 2), r2_poke(trefoil_left)])
    add("figure_eight", figure_eight, "transcribed",
        [twist_knot(2), braid_closure([1, -2, 1, -2], 3),
         r1_kink(figure_eight, 1, 1)])

    add("granny", trefoil_right.connected_sum(trefoil_right), "constructed",
        [r1_kink(trefoil_right.connected_sum(trefoil_right), 1, -1)])
    add("square", trefoil_right.connected_sum(trefoil_left), "constructed",
        [trefoil_left.connected_sum(trefoil_right)])

    add("twist_4", twist_knot(4), "constructed", [r2_poke(twist_knot(4))])
    add("pretzel_3_5_m2", pretzel(3, 5, -2), "constructed",
        [r1_kink(pretzel(3, 5, -2), min(pretzel(3, 5, -2).arcs), 1)])
    add("torus_2_4", braid_closure([1, 1, 1, 1], 2), "constructed",
        [r2_poke(braid_closure([1, 1, 1, 1], 2))])

    add("kanenobu_0_0", kanenobu(0, 0), "constructed",
        [r2_poke(kanenobu(0, 0))])
    add("kanenobu_1_1", kanenobu(1, 1), "constructed", [])
    add("kanenobu_2_m2", kanenobu(2, -2), "constructed", [])
    add("kanenobu_0_inf", kanenobu(0, None), "constructed", [])

    add("wh_double_square", wh_double, "constructed", [])
    add("wh_double_square_mutant", wh_mutant, "constructed", [])
    return entries


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)
    entries = build_entries()
    index = {"schema": "skeinlab-catalog/1", "entries": {}}
    for name, (diagram, provenance, variants) in sorted(entries.items()):
        assert is_planar(diagram), name
        target = homflypt(diagram) if diagram.crossings or diagram.free_loops else None
        (DATA / f"{name}.pd").write_text(diagram.to_pd_text() + "\n", encoding="utf-8")
        variant_files = []
        for k, var in enumerate(variants, 1):
            assert is_planar(var), (name, k)
            assert homflypt(var) == target, (name, k)
            fname = f"{name}.var{k}.pd"
            (DATA / fname).write_text(var.to_pd_text() + "\n", encoding="utf-8")
            variant_files.append(fname)
        index["entries"][name] = {
            "file": f"{name}.pd",
            "components": diagram.n_components,
            "writhe": diagram.writhe,
            "provenance": provenance,
            "variants": variant_files,
        }
        print(f"{name}: {len(diagram.crossings)} crossings, "
              f"{diagram.n_components} comp, writhe {diagram.writhe}, "
              f"{len(variant_files)} variants")
    (DATA / "index.json").write_text(json.dumps(index, indent=2) + "\n",
                                     encoding="utf-8")
    print(f"{len(index['entries'])} entries written to {DATA}")


if __name__ == "__main__":
    main()
