"""Derive and validate the two-slot twist-family template used by kanenobu().

The template is the numerator closure of a two-tangle sum A + B whose seam
and closure arcs serve as two antiparallel band sites.  This script rebuilds
the diagram from its tangle recipe, recomputes the frozen PD text and site
arcs, and re-runs the defining checks:

  * turn-back filling of either site gives one and the same 2-component
    link value, no matter how many half twists sit at the other site;
  * the skein module value of kanenobu(2p, 2q) depends only on p + q, and
    different sums give different polynomials;
  * kanenobu(m, n) and kanenobu(n, m) share their polynomial.
"""

from __future__ import annotations

import itertools

from skeinlab.skein import (homflypt, insert_antiparallel_twists,
                            splice_infinity)
from skeinlab.tangle import (_KANENOBU_BASE_PD, _KANENOBU_SITES, _close,
                             _tangle_sum_tracked, integer_tangle, kanenobu,
                             rotate, tangle_sum, vertical_tangle)


def build_template():
    """Recreate the frozen base diagram and its two site arc pairs."""
    a = rotate(tangle_sum(vertical_tangle(-3), integer_tangle(-1)), 1)
    b = tangle_sum(integer_tangle(-3), integer_tangle(-1))
    b = b.relabelled(max(a.arcs) + 1)
    summed, seam_find = _tangle_sum_tracked(a, b)
    diagram, close_find = _close(summed, (("NW", "NE"), ("SW", "SE")))
    site1 = (close_find(seam_find(a.corners["NE"])),
             close_find(seam_find(a.corners["SE"])))
    site2 = (close_find(summed.corners["NW"]), close_find(summed.corners["SW"]))
    return diagram, site1, site2


def main() -> None:
    diagram, site1, site2 = build_template()
    print("base PD :", diagram.to_pd_text())
    print("sites   :", site1, site2)
    assert diagram.to_pd_text().startswith(_KANENOBU_BASE_PD), "frozen PD drifted"
    assert (site1, site2) == _KANENOBU_SITES, "frozen sites drifted"

    # Filling either slot with the crossingless turn-back must give one and
    # the same 2-component link value, no matter how many twists sit in the
    # other slot; that constancy is what forces the p + q dependence below.
    spliced = [kanenobu(None, other) for other in range(-2, 3)]
    spliced += [kanenobu(other, None) for other in range(-2, 3)]
    assert all(d.n_components == 2 for d in spliced)
    splice_values = {homflypt(d).to_text() for d in spliced}
    assert len(splice_values) == 1, splice_values
    print("turn-back filling of either slot: one fixed 2-component link value")

    values = {(p, q): homflypt(kanenobu(2 * p, 2 * q))
              for p, q in itertools.product(range(-2, 3), repeat=2)}
    for (a, b) in itertools.combinations(values, 2):
        if sum(a) == sum(b):
            assert values[a] == values[b], (a, b)
    by_sum = {p + q: P for (p, q), P in values.items()}
    assert len({P.to_text() for P in by_sum.values()}) == len(by_sum)
    print("kanenobu(2p, 2q): polynomial depends exactly on p + q")

    for m, n in [(0, 2), (2, -2), (1, 0), (1, 2), (-1, 2), (3, -2)]:
        assert homflypt(kanenobu(m, n)) == homflypt(kanenobu(n, m)), (m, n)
    print("kanenobu(m, n) ~ kanenobu(n, m) at the polynomial level")


if __name__ == "__main__":
    main()
