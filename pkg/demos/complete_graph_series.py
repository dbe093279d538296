"""Hilbert series, dual resolution and cut polynomial for the graphic arrangement of K_n."""

import time

from netdual import alexander_dual, hilbert_series, hochster_betti, kn_hilbert_closed_form, kn_ideal
from netdual.monomial_os import quadratic_part
from netdual.series import cut_polynomial, kn_cut_c2, kn_cut_c3

for n in range(4, 8):
    J = kn_ideal(n)
    series = hilbert_series(J)
    print(f"K_{n}: {len(J.gens)} generators, series {series}")
    print("  matches closed form:", series == kn_hilbert_closed_form(n))

    start = time.perf_counter()
    table = hochster_betti(alexander_dual(J)).to_quotient()
    print(f"  dual pdim {table.pdim}, graded {table.graded} ({time.perf_counter() - start:.2f}s)")

    cut = cut_polynomial(quadratic_part(J))
    print(f"  cut polynomial {cut}")
    print(f"  c2 = {kn_cut_c2(n)}, c3 = {kn_cut_c3(n)}")
