"""Moment growth of positive tuples and joint bounded-vector spaces.

||A^alpha h|| is a moment of the scalar measure the vector h induces, so
relative growth rates and membership in ran F(bound) are both computable
without forming any matrix power.
"""

import numpy as np

from specorder import bounded_vector_membership, growth_ratio, validate_tuple

a = validate_tuple([np.diag([0.5, 1.0]), np.diag([1.0, 0.5])])
b = validate_tuple([np.diag([1.0, 2.0]), np.diag([2.0, 1.0])])
h = np.array([1.0, 1.0]) / np.sqrt(2)

rep = growth_ratio(a, b, h, alpha_max=10)
print("shell maxima of (||A^a h|| / ||B^a h||)^(1/|a|):")
for shell in sorted(rep.shell_maxima):
    print(f"  |alpha| = {shell:2d}: {rep.shell_maxima[shell]:.6f}")
print("limit estimate:", f"{rep.limit_estimate:.6f}",
      f"({rep.n_tested} exponents tested)")

# membership at a bound covering only part of the spectrum
t = validate_tuple([np.diag([1.0, 3.0]), np.diag([2.0, 1.0])])
e1 = np.array([1.0, 0.0])
mix = np.array([1.0, 1.0]) / np.sqrt(2)

for name, vec in (("e1", e1), ("mix", mix)):
    res = bounded_vector_membership(t, vec, (1.0, 2.0))
    print(f"{name}: member={res.member} growth_member={res.growth_member} "
          f"residual={res.residual:.2e} rate={res.growth_rate:.3f}")

# kernel vectors exercise the 0/0 = 0 and a/0 = inf conventions
ident = validate_tuple([np.eye(2), np.eye(2)])
killer = validate_tuple([np.diag([1.0, 0.0]), np.eye(2)])
e2 = np.array([0.0, 1.0])
print("a/0 convention:", growth_ratio(ident, killer, e2, alpha_max=3).limit_estimate)
print("0/0 convention:",
      growth_ratio(killer, killer, e2, alpha_max=3,
                   lambda_filter=lambda alpha: alpha[1] == 0).limit_estimate)
