"""Two order-theoretic endpoints: a missing infimum and normal operators.

The coordinatewise subspace-intersection candidate is the only possible
infimum of two projection tuples, but its components need not commute; when
they do not, no commuting tuple realizes the meet. Normal operators embed
into the order through their Hermitian real and imaginary parts.
"""

import numpy as np

from specorder import (
    NormalOperator,
    infimum_probe,
    normal_leq,
    projection_pair_no_infimum,
    spectral_leq,
)

a, b = projection_pair_no_infimum()
rep = infimum_probe(a, b)
print("candidate meet components:")
for c in rep.candidates:
    print(np.round(np.real_if_close(c.matrix), 6), "\n")
print("components commute:", rep.commutes,
      " commutator defect:", f"{rep.defect:.6f}")

# the normal-operator order reduces to the pair (Re T, Im T)
s = NormalOperator.from_matrix(np.diag([1j, 1.0]))
t = NormalOperator.from_matrix(np.diag([1.0 + 1j, 2.0 + 1j]))
print("s <= t for normals:", normal_leq(s, t).holds)
print("reverse:", normal_leq(t, s).holds)

# the same verdict through the explicit part tuples
print("parts route agrees:",
      spectral_leq(s.parts(), t.parts()).holds == normal_leq(s, t).holds)
