"""
Verification campaigns and the stabilizer census
================================================

Campaigns drive the structural criteria against brute-force oracles on
seeded random instances.  A deliberately broken criterion (a mutant)
must turn a campaign red; the census walks an entire matrix group and
classifies every element.
"""

import json

from qgrass import (
    SchubertVariety,
    make_field,
    stabilizer_census,
    verify_flag_equality,
    verify_redundancy,
)

rep = verify_redundancy(2, 4, 2, flags_per_alpha=10, seed=0)
print("redundancy campaign:", rep.verdict, "over", rep.cases_tested, "cases")

rep = verify_flag_equality(2, 4, 2, trials=120, seed=1)
print("equality campaign:  ", rep.verdict, "with",
      rep.parameters["witnessed"], "of", rep.parameters["negative_cases"],
      "negatives witnessed")

# the same campaign with a sabotaged criterion must fail
rep = verify_flag_equality(2, 4, 2, trials=120, seed=1, mutant="alpha-for-alpha-nc")
print("sabotaged criterion:", rep.verdict, f"({len(rep.failures)} recorded failures)")
print("first failure:", json.dumps(rep.failures[0], sort_keys=True))

# census: classify all 168 invertible 3x3 matrices over the 2-element
# field against the variety of lines sitting inside a fixed line
gf = make_field(2)
omega = SchubertVariety.standard(gf, 3, (1, 3))
rep = stabilizer_census(omega, oracle="full")
print("\ncensus of", rep.group_size, "matrices:")
print("  criterion accepts:", rep.fast_count)
print("  oracle accepts:   ", rep.oracle_count)
print("  verdict:", rep.verdict)
print("  accepted fraction:", f"{rep.fraction:.4f}", "= 1/7")
