"""Derive and validate the frozen trivial-nabla mutant pair.

The pair consists of the untwisted Whitehead double of the square knot and
its mutation over the 4-ended region formed by the doubled image of one
trefoil summand.  Both diagrams share their skein polynomial (hence their
Jones and Conway specializations); the Conway polynomial is trivial while
the Jones polynomial is not, so the polynomials cannot certify unknotting.
"""

from __future__ import annotations

from skeinlab.catalog import load_diagram
from skeinlab.diagram import parse_pd
from skeinlab.laurent import LaurentPoly
from skeinlab.skein import conway_poly, homflypt, jones
from skeinlab.tangle import mutate, whitehead_double_with_clasp

MUTATION_REGION = tuple(range(12))
MUTATION_CORNERS = {"NW": 2, "NE": 53, "SW": 14, "SE": 15}


def build_pair():
    trefl = parse_pd("PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]")
    companion = trefl.mirror().connected_sum(trefl)
    double, _, _ = whitehead_double_with_clasp(companion, clasp_sign=1)
    mutant = mutate(double, MUTATION_REGION, MUTATION_CORNERS, "y")
    return double, mutant


def chi(diagram):
    return -len(diagram.crossings) + len(diagram.faces)


def main() -> None:
    double, mutant = build_pair()
    print("A:", double.to_pd_text())
    print("B:", mutant.to_pd_text())

    frozen_a = load_diagram("wh_double_square")
    frozen_b = load_diagram("wh_double_square_mutant")
    assert double.to_pd_text() == frozen_a.to_pd_text(), "frozen pair drifted (A)"
    assert mutant.to_pd_text() == frozen_b.to_pd_text(), "frozen pair drifted (B)"

    one_z = LaurentPoly.var("z") ** 0
    one_q = LaurentPoly.var("q") ** 0
    assert chi(double) == 2 and chi(mutant) == 2
    assert double.n_components == 1 and mutant.n_components == 1
    assert conway_poly(double) == one_z
    assert jones(double) != one_q
    assert homflypt(mutant) == homflypt(double)
    assert jones(mutant) == jones(double)
    assert mutant.canonical_key() != double.canonical_key()
    print("pair validated: nabla trivial, V nontrivial, polynomials equal,")
    print("diagrams canonically distinct")


if __name__ == "__main__":
    main()
