import time
from skeinlab.catalog import get, names
from skeinlab.kauffman import (kauffman_f, jones_via_kauffman, jones_via_jck,
                               f_special_check, g_route_check)
from skeinlab.skein import jones

for nm in sorted(names(), key=lambda n: len(get(n).crossings)):
    d = get(nm)
    ncr = len(d.crossings)
    if ncr > 12:
        print(f"{nm:24s} ({ncr} cr) skipped", flush=True)
        continue
    t0 = time.time()
    ok1 = jones_via_kauffman(d) == jones(d)
    ok2 = jones_via_jck(d) == jones(d)
    ok3 = f_special_check(d) if ncr <= 10 else "skip"
    ok4 = g_route_check(d) if ncr <= 10 else "skip"
    print(f"{nm:24s} ({ncr} cr) viaF:{ok1} viaJCK:{ok2} fspec:{ok3} groute:{ok4}"
          f"  {time.time()-t0:.1f}s", flush=True)
