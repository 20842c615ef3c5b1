"""Build toric varieties from gradings written by hand.

Three small gradings: the projective plane, a product of two lines, and a
weighted projective plane whose fan stays valid but is not smooth. Shows
the monomial enumeration, the radical, the fan certificates, and the JSON
shape the command-line tool accepts.
"""

import json

from coxtoric.chambers import chamber_of, effective_cone
from coxtoric.fans import fan_from_irrelevant, fan_report
from coxtoric.grading import DegreeMatrix, gale_dual
from coxtoric.monomials import irrelevant_radical, monomials_of_degree

# P^2: three generators, all of degree 1
p2 = DegreeMatrix.make([(1,), (1,), (1,)], labels=("x", "y", "z"))
print("P^2 monomials of degree 2:")
for e in monomials_of_degree(p2, (2,)):
    print("  ", e)

ideal = irrelevant_radical(p2, (1,))
fan = fan_from_irrelevant(gale_dual(p2), ideal)
print("P^2 fan:", fan_report(fan)["numMaximalCones"], "maximal cones")

# P^1 x P^1: rank-2 grading, generators paired by factor
p1xp1 = DegreeMatrix.make([(1, 0), (1, 0), (0, 1), (0, 1)],
                          labels=("s", "t", "u", "v"))
ideal = irrelevant_radical(p1xp1, (1, 1))
print("\nP^1 x P^1 radical supports:", ideal.generators)
report = fan_report(fan_from_irrelevant(gale_dual(p1xp1), ideal))
print("P^1 x P^1 fan:", report["numMaximalCones"], "cones,",
      "simplicial:", report["simplicial"], "projective:",
      report["projective"])

# the (1,1,1) and (1,0)/(0,1) chambers are full-dimensional; a boundary
# class like (1,0) on the product sits on a wall of the effective cone
eff = effective_cone(p1xp1)
print("effective cone contains (1,1) strictly:",
      eff.contains_interior((1, 1)))
ch = chamber_of(p1xp1, (1, 1))
print("chamber of (1,1):", ch.hrep, "full-dimensional:",
      ch.full_dimensional)

# P(1,1,2): same machinery, non-smooth but still simplicial fan
weighted = DegreeMatrix.make([(1,), (1,), (2,)], labels=("a", "b", "c"))
ideal = irrelevant_radical(weighted, (2,))
report = fan_report(fan_from_irrelevant(gale_dual(weighted), ideal))
print("\nP(1,1,2) fan:", report["numMaximalCones"], "cones,",
      "rays:", report["rays"])
print("valid:", report["valid"], "complete:", report["complete"],
      "projective:", report["projective"])

# the same grading as an input file for the command-line tool
payload = {
    "picRank": 1,
    "numGens": 3,
    "columns": [[1], [1], [2]],
    "labels": ["a", "b", "c"],
}
print("\nCLI input for the weighted example:")
print(json.dumps(payload, indent=2))
print("run: coxtoric fan <file> --degree 2")
