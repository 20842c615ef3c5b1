"""Exact incidence in P^5: a 2-plane meeting four given 2-planes.

The bundled configuration carries four target planes, a claimed transversal
plane, and four claimed intersection points. Three of the points check out
exactly; the third target turns out to miss the claimed plane entirely, so
the printed data is inconsistent there. The solver then produces a plane
that does meet all four targets transversally, and a line-based witness
shows why the distinct-points refinement genuinely constrains the answer.
"""

from coxtoric.delpezzo import (claimed_transversal, printed_points,
                               target_planes)
from coxtoric.incidence import (find_transversal_plane,
                                general_position_on_plane, intersect,
                                witness_plane_via_line)

targets = target_planes()
sigma = claimed_transversal()
printed = printed_points()

print("claimed plane, cut out by:")
for f in sigma.equations():
    print("  ", f, ". x = 0")

print("\nintersections with the four targets:")
for i, target in enumerate(targets):
    meet = intersect(sigma, target)
    if meet is None:
        computed = "empty"
    elif meet.projective_dim == 0:
        computed = meet.as_point().coords
    else:
        computed = f"dim {meet.projective_dim}"
    print(f"  target {i + 1}: computed {computed}, "
          f"printed {printed[i].coords}")

# the printed point for target 3 satisfies the target equations but not
# the plane equations, and the four printed points span a 3-space
print("\nprinted point 3 on target 3:",
      targets[2].contains_point(printed[2]))
print("printed point 3 on the claimed plane:",
      sigma.contains_point(printed[2]))
verdict = general_position_on_plane(printed, sigma)
print("general position of the printed points:", verdict.ok,
      f"({verdict.reason})")

# the solver keeps incidence with three targets built in and solves the
# fourth as a linear condition, then replays every claimed property
found = find_transversal_plane(targets, seed=1, max_tries=100)
print(f"\nsolver plane, found on attempt {found.attempts}:")
for f in found.plane.equations():
    print("  ", f, ". x = 0")
for i, p in enumerate(found.points):
    print(f"  meets target {i + 1} in {p.coords}")
print("general position:",
      general_position_on_plane(found.points, found.plane).ok)

# planes through the two pairwise intersection points meet all four
# targets, but two meetings coincide, so transversality properly fails
witness = witness_plane_via_line(targets)
print("\nline-based witness plane meets all four targets;",
      "passes the refinement:", witness.refinement)
print("  ", witness.note)
