"""Compare the quadratic parts of J for the two 9_3 configurations."""

from pathlib import Path

from netdual import alexander_dual, build_J, quadratic_part
from netdual.catalog import catalog
from netdual.io import read_arrangement
from netdual.resolutions import QUOTIENT, betti_table, has_linear_resolution, is_cohen_macaulay

non_pappus_file = Path(__file__).resolve().parents[1] / "tests" / "golden" / "non_pappus.json"
configs = {
    "pappus": catalog("pappus")[0],
    "non-pappus": read_arrangement(non_pappus_file),
}

for name, arr in configs.items():
    J2 = quadratic_part(build_J(arr))
    dual = alexander_dual(J2)
    print(f"== {name}: {len(J2.gens)} quadrics")
    print(betti_table(J2, QUOTIENT).text())
    print("dual of J2:")
    print(betti_table(dual, QUOTIENT).text())
    print("Cohen-Macaulay:", is_cohen_macaulay(J2), " linear dual:", has_linear_resolution(dual))
    print()
